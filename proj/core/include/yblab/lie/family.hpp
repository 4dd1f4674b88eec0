#pragma once

#include <map>
#include <optional>

#include "yblab/comb/trans.hpp"
#include "yblab/lie/algebra.hpp"
#include "yblab/report/report.hpp"

namespace yblab {

// Family {r^{(c)}}_{c in C} of arity-2 tensors on one algebra, all inducing
// the same cobracket.
struct RFamily {
  LieAlgebra::Ptr alg;
  std::map<ColorId, LieTensor> members;
  std::string name;

  const LieTensor& member(ColorId c) const {
    auto it = members.find(c);
    if (it == members.end()) throw std::out_of_range("RFamily: unknown color");
    return it->second;
  }
  std::vector<ColorId> palette() const {
    std::vector<ColorId> p;
    for (const auto& [c, t] : members) p.push_back(c);
    return p;
  }
};

// r = sum_i E_ii (x) E_ii + 2 sum_{i<j} E_ij (x) E_ji on gl_m.
LieTensor standard_glm_r(int m);
// Casimir sum_{a,b} E_ab (x) E_ba.
LieTensor glm_casimir(int m);
// {r^{(+1)} = r, r^{(-1)} = -tau(r)} over gl_m, sign palette {0,1}.
RFamily standard_classical_family(int m);

// Skew-symmetric r-matrix sum_t d_t (E_1t (x) E_tm - E_tm (x) E_1t),
// d_t = 2 - delta_{t,1} - delta_{t,m}, on gl_m.
LieTensor skew_glm_r(int m);
// {rhat + lambda*Omega} over takiff(gl_m); color id i maps to lambdas[i].
RFamily takiff_family(int m, const std::vector<Rational>& lambdas);
// rhat = (f (x) id + id (x) f)(r) inside takiff(g), f = identity on g_ad.
LieTensor takiff_hat(const LieAlgebra::Ptr& t, const LieTensor& r_on_g);
// (f (x) f)(Omega): the g-invariant moved into V (x) V.
LieTensor takiff_omega(const LieAlgebra::Ptr& t, const LieTensor& omega_on_g);

// [r12^{(c)}, r13^{(c')}] + [r12^{(c)}, r23^{(c'')}] + [r13^{(c')}, r23^{(c'')}] = 0,
// required whenever c' is one of {c, c''}.
bool transitive_cybe_check(const RFamily& fam, ColorId c, ColorId cp, ColorId cpp);
// every admissible triple over the palette
bool family_transitive_cybe_all(const RFamily& fam);

// r (x)-component placed with slot-1 in copy c1 and slot-2 in copy c2 of g^{(+)n}.
LieTensor place_pair(const LieTensor& r, const LieAlgebra::Ptr& sum_alg, int n, int c1, int c2);

// sum_{i,j} r^{(a_{i,j})} with slot-1 copy j, slot-2 copy i (row index i of the
// matrix pairs with the second tensor factor).
LieTensor build_repsmat(const RFamily& fam, const TransMatrix& a, const LieAlgebra::Ptr& sum_alg);

// j_c = sum_{i<j} r^{(c(i,j))} with slot-1 copy j, slot-2 copy i.
LieTensor build_jc(const RFamily& fam, const TransArray& c, const LieAlgebra::Ptr& sum_alg);
// r0 = sum_i r^{(d_i)} on the diagonal copies.
LieTensor build_r0(const RFamily& fam, const std::vector<ColorId>& d, const LieAlgebra::Ptr& sum_alg);
// cybe(r0 + (j - tau j)) == 0
bool classical_twist_check(const LieTensor& j, const LieTensor& r0);
// r(c,d) = r0 + j_c - tau(j_c)
LieTensor build_rcd(const RFamily& fam, const TransArray& c, const std::vector<ColorId>& d,
                    const LieAlgebra::Ptr& sum_alg);
// literal three-sum form; equal to build_rcd by construction, kept as a
// cross-check of the placement conventions
LieTensor build_rcd_literal(const RFamily& fam, const TransArray& c, const std::vector<ColorId>& d,
                            const LieAlgebra::Ptr& sum_alg);

// member + tau(member') contained in z(g) (x) z(g), tested by two-sided
// ad-invariance (z(x)g and g(x)z memberships).
bool central_pair_criterion(const RFamily& fam, ColorId cik, ColorId cki);
// invariance of R + tau(R) over the sum algebra
bool quasi_invariant_check(const LieTensor& repsmat);
// equivalence predicate of the two views for a whole matrix
bool quasi_invariant_criterion_matrix(const RFamily& fam, const TransMatrix& a);

// for every transitive matrix over the palette: build r^{(a)}, test CYBE,
// report; notes record the quasi-triangularity flag per candidate
ScanReport conjecture_classical_scan(const RFamily& fam, int n);

// [r(c,d), Delta(sum_i x_i)] = sum_{i,j} delta(x)_{i,j} for every basis x
bool diag_embed_check(const RFamily& fam, const TransArray& c, const std::vector<ColorId>& d,
                      const LieAlgebra::Ptr& sum_alg);

// the cobracket delta~_c does not depend on d: compare two d choices
bool d_independence_check(const RFamily& fam, const TransArray& c, const std::vector<ColorId>& d1,
                          const std::vector<ColorId>& d2, const LieAlgebra::Ptr& sum_alg);

// Key commutator identity instantiated in U(g)^{(x)(3m+3)}; gamma on I_m,
// alpha of length m, guaranteed only when gamma^alpha is transitive.
bool key_identity_check(const RFamily& fam, const TransArray& gamma,
                        const std::vector<ColorId>& alpha);

}  // namespace yblab
