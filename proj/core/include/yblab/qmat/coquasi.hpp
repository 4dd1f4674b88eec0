#pragma once

#include <mutex>

#include "yblab/qmat/ncpoly.hpp"

namespace yblab {

// Evaluation of the counital co-quasi-triangular forms R^{(eps)} on free-word
// representatives of the quantum-matrix bialgebra (well-defined modulo the
// defining relations; see the compatibility test).  Values extend from the
// generator table by the multiplicativity axioms
//   R(ab, c) = R(a, c_(1)) R(b, c_(2)),   R(a, bc) = R(a_(1), c) R(a_(2), b),
// and the convolution inverse is (R^{(eps)})^{*-1} = R^{(-eps)} o tau.
class Coquasi {
 public:
  explicit Coquasi(int m);

  int m() const { return m_; }

  RatFuncQ gen_table(int eps, int k, int l, int kp, int lp) const;

  RatFuncQ counit(const NCWord& w) const;
  RatFuncQ counit_poly(const NCPoly& p) const;

  RatFuncQ eval(int eps, const NCWord& a, const NCWord& b) const;
  RatFuncQ eval_inv(int eps, const NCWord& a, const NCWord& b) const {
    return eval(-eps, b, a);
  }
  RatFuncQ eval_poly(int eps, const NCPoly& a, const NCPoly& b) const;

  // convolution product of R-evaluations against split arguments:
  // (R * R^{*-1})(a, b) over the tensor-square coalgebra
  RatFuncQ conv_with_inverse(int eps, const NCWord& a, const NCWord& b) const;

  // Psi^{(eps)}(h (x) h') = sum R^{*-1}(h_(1), h'_(1)) R(h_(3), h'_(3)) h'_(2) (x) h_(2)
  std::map<std::pair<NCWord, NCWord>, RatFuncQ> psi(int eps, const NCWord& h,
                                                    const NCWord& hp) const;

  // all middle-index splittings w -> (upper, lower) of the word coproduct
  std::vector<std::pair<NCWord, NCWord>> splittings(const NCWord& w) const;

 private:
  int m_;
  mutable std::map<std::tuple<int, NCWord, NCWord>, RatFuncQ> memo_;
  mutable std::mutex mu_;
};

// Sweedler expansion of a free word: Delta(x_{i1 j1} ... x_{ir jr}) summed
// over middle-index chains, every coefficient 1.
inline std::vector<std::pair<NCWord, NCWord>> comultiply(const NCWord& w, int m) {
  return Coquasi(m).splittings(w);
}

}  // namespace yblab
