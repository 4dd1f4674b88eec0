#pragma once

#include "yblab/quantum/family.hpp"
#include "yblab/util/cyclotomic.hpp"

namespace yblab {

// Root-of-unity data: zeta is a primitive 4l-th root, q = zeta^2 is a
// primitive 2l-th root (l > 2).
struct RootData {
  int ell;
  CycFieldPtr field;   // Q(zeta_{4l})
  Cyclotomic zeta;
  Cyclotomic q;

  explicit RootData(int l);
  Cyclotomic q_pow(long e) const { return zeta.pow(2 * e); }
  Cyclotomic zeta_pow(long e) const { return zeta.pow(e); }
};

// The 3-dimensional module: F v_i = v_{i+1}, E v_i = (q + q^{-1}) v_{i-1},
// L v_i = q^{1-i} v_i.
struct ModuleV {
  RootData root;
  TensorOp<Cyclotomic> E, F, L, Linv;

  explicit ModuleV(int l);

  // generator action on V^{(x)N} through the iterated coproduct
  TensorOp<Cyclotomic> actE(int N) const;
  TensorOp<Cyclotomic> actF(int N) const;
  TensorOp<Cyclotomic> actL(int N) const;
  TensorOp<Cyclotomic> actL2(int N, int power) const;  // L^{power} on every leg
};

// Color ids for the four-member family {R^{(eps,eps')}}:
// 0 = (+,+), 1 = (-,+), 2 = (+,-), 3 = (-,-).
ColorId uqsl2_color(int eps, int epsp);
std::pair<int, int> uqsl2_signs(ColorId c);

// R^{(eps,eps')} on V (x) V, literal double sum over zeta powers.
TensorOp<Cyclotomic> uqsl2_R(const ModuleV& mod, int eps, int epsp);

// Diagonal closed form of the pure L-double-sum
// (1/4l) sum_{ij} zeta^{theta i j} L^i (x) L^j  with theta = -+1 + 2l [eps=-1];
// asserted equal to the literal summation.
TensorOp<Cyclotomic> uqsl2_L_double_sum_literal(const ModuleV& mod, long theta);
TensorOp<Cyclotomic> uqsl2_L_double_sum_closed(const ModuleV& mod, long theta);

QFamily<Cyclotomic> uqsl2_family(const ModuleV& mod);

// module relations as operators on V^{(x)N}:
// [E,F] = (L^2 - L^{-2})/(q - q^{-1}), E^l = F^l = 0, L^{2l} = 1
bool uqsl2_module_relations_check(const ModuleV& mod, int N);

// R Delta(h) = Delta^{op}(h) R on V (x) V for h in {E, F, L}, every member
bool uqsl2_intertwiner_check(const ModuleV& mod);

struct CounterexampleResult {
  bool delta_f_kills_u = false;        // Delta_{H(x)H}(F)(u) = 0
  bool intermediate_matches = false;   // R_{1,4} R_{3,2}(u) = q^2 u + (q^4-1) v2 v2 v1 v2
  bool final_matches = false;          // result equals q^2 (q^4 - 1) v2^{(x)4}
  bool nonzero = false;
  Cyclotomic coefficient;              // the exact value q^2 (q^4 - 1)
};

// The twist non-equivalence witness on V^{(x)4} with u = v2 (x) v1 (x) v2 (x) v2.
CounterexampleResult uqsl2_counterexample(const ModuleV& mod);

// (prod-> R^{(c_i)}_{i,n}) Delta^{(n)}(h) = rotated Delta^{(n)}(h) (prod-> R^{(c_i)}_{i,n})
// for h in {E,F,L}; the rotation sends Sweedler slot 1 to the last leg.
bool uqsl2_diag_hom_check(const ModuleV& mod, const std::vector<ColorId>& colors);

}  // namespace yblab
