#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "yblab/util/rational.hpp"

namespace yblab {

// Sparse vector in the underlying space of a Lie algebra.
using LieVec = std::map<int, Rational>;

// Structure-constant Lie algebra over Q.  Antisymmetry and the Jacobi
// identity are verified eagerly at construction.
class LieAlgebra {
 public:
  using Ptr = std::shared_ptr<const LieAlgebra>;

  LieAlgebra(int dim, std::vector<std::string> labels,
             std::map<std::pair<int, int>, LieVec> brackets, std::string name);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  // [e_a, e_b] as a sparse vector
  const LieVec& bracket(int a, int b) const;
  LieVec bracket(const LieVec& x, const LieVec& y) const;

 private:
  void verify() const;
  int dim_;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, LieVec> br_;
  std::string name_;
  static const LieVec kEmpty;
};

// gl_m with basis E_{ab}, index (a-1)*m + (b-1), 1-based a,b.
LieAlgebra::Ptr gl(int m);
int gl_index(int m, int a, int b);

// n commuting copies; basis index = copy*dim(g) + local, copies 0-based.
LieAlgebra::Ptr direct_sum(const LieAlgebra::Ptr& g, int n);
inline int sum_index(const LieAlgebra::Ptr& g, int copy, int local) { return copy * g->dim() + local; }

// V (x) g with V an abelian copy of the adjoint module and f = id:
// indices 0..d-1 are v_a, d..2d-1 are x_a.
LieAlgebra::Ptr takiff(const LieAlgebra::Ptr& g);

// Sparse exact element of a^{(x)k}, k in {1,2,3}.
class LieTensor {
 public:
  using Key = std::array<int, 3>;  // unused slots padded with -1

  LieTensor(LieAlgebra::Ptr alg, int arity) : alg_(std::move(alg)), arity_(arity) {
    if (arity < 1 || arity > 3) throw std::invalid_argument("LieTensor: arity in {1,2,3}");
  }

  const LieAlgebra::Ptr& algebra() const { return alg_; }
  int arity() const { return arity_; }
  bool is_zero() const { return m_.empty(); }
  std::size_t support_size() const { return m_.size(); }
  const std::map<Key, Rational>& terms() const { return m_; }

  void add(const Key& k, const Rational& v);
  Rational at(const Key& k) const;

  LieTensor operator-() const;
  friend LieTensor operator+(const LieTensor& a, const LieTensor& b);
  friend LieTensor operator-(const LieTensor& a, const LieTensor& b);
  LieTensor scaled(const Rational& c) const;
  friend bool operator==(const LieTensor& a, const LieTensor& b);
  friend bool operator!=(const LieTensor& a, const LieTensor& b) { return !(a == b); }

  // permutation of tensor slots: slot t of the result reads slot perm[t-1]
  LieTensor permuted(const std::vector<int>& perm) const;
  LieTensor tau() const { return permuted({2, 1}); }  // arity 2 flip

  std::string str() const;

 private:
  LieAlgebra::Ptr alg_;
  int arity_;
  std::map<Key, Rational> m_;
};

// [A_{sA1,sA2}, B_{sB1,sB2}] in a^{(x)3}; the slot sets must overlap in
// exactly one slot (disjoint placements commute and give zero).
LieTensor bracket_placed(const LieTensor& A, int sA1, int sA2, const LieTensor& B, int sB1,
                         int sB2);

// [r12,r13] + [r12,r23] + [r13,r23]; zero iff r solves the CYBE.
LieTensor cybe(const LieTensor& r);

// (ad_x (x) id + id (x) ad_x)(s) accumulated over every basis x; true iff
// s is invariant under the diagonal action.
bool invariance_check(const LieTensor& s);
bool invariance_check3(const LieTensor& t);

// delta_r(x) = [r, x(x)1 + 1(x)x], computed leg-wise
LieTensor delta_r(const LieTensor& r, int basis_x);
LieTensor delta_r(const LieTensor& r, const LieVec& x);

struct CobracketAxioms {
  bool antisym = false;
  bool co_jacobi = false;
};
CobracketAxioms cobracket_axioms_check(const LieTensor& r);

}  // namespace yblab
