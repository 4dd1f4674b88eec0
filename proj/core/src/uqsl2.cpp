#include "yblab/uqsl2/uqsl2.hpp"

#include <numeric>

namespace yblab {

RootData::RootData(int l)
    : ell(l),
      field(CycField::get(static_cast<unsigned>(4 * l))),
      zeta(Cyclotomic::zeta(field)),
      q(zeta * zeta) {
  if (l <= 2) throw std::invalid_argument("RootData: l > 2 required");
}

namespace {
TensorOp<Cyclotomic> one_leg_op() { return TensorOp<Cyclotomic>(LegShape::uniform(1, 3)); }
}  // namespace

ModuleV::ModuleV(int l)
    : root(l), E(one_leg_op()), F(one_leg_op()), L(one_leg_op()), Linv(one_leg_op()) {
  Cyclotomic qq = root.q;
  Cyclotomic one(root.field, Rational(1));
  // F v_i = v_{i+1}; E v_i = (q + q^{-1}) v_{i-1}; L v_i = q^{1-i} v_i
  F.set(1, 0, one);
  F.set(2, 1, one);
  Cyclotomic qpq = qq + qq.inverse();
  E.set(0, 1, qpq);
  E.set(1, 2, qpq);
  for (int i = 0; i <= 2; ++i) {
    L.set(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(i), root.q_pow(1 - i));
    Linv.set(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(i), root.q_pow(i - 1));
  }
}

TensorOp<Cyclotomic> ModuleV::actL2(int N, int power) const {
  LegShape big = LegShape::uniform(N, 3);
  TensorOp<Cyclotomic> out(big);
  Cyclotomic one(root.field, Rational(1));
  for (std::uint64_t idx = 0; idx < big.total(); ++idx) {
    long expo = 0;
    for (int t = 1; t <= N; ++t) expo += (1 - big.digit(idx, t)) * power;
    out.set(idx, idx, root.q_pow(expo));
  }
  return out;
}

TensorOp<Cyclotomic> ModuleV::actL(int N) const { return actL2(N, 1); }

TensorOp<Cyclotomic> ModuleV::actE(int N) const {
  // Delta(E) = E (x) L^2 + 1 (x) E iterated: sum_t E at leg t, L^2 on legs > t.
  LegShape big = LegShape::uniform(N, 3);
  TensorOp<Cyclotomic> out(big);
  Cyclotomic one(root.field, Rational(1));
  for (int t = 1; t <= N; ++t) {
    std::vector<Placed<Cyclotomic>> fs{{E, {t}}};
    TensorOp<Cyclotomic> l2rest(big);
    for (std::uint64_t idx = 0; idx < big.total(); ++idx) {
      long expo = 0;
      for (int s = t + 1; s <= N; ++s) expo += 2 * (1 - big.digit(idx, s));
      l2rest.set(idx, idx, root.q_pow(expo));
    }
    std::vector<Placed<Cyclotomic>> prod;
    std::vector<int> all_legs;
    for (int s = 1; s <= N; ++s) all_legs.push_back(s);
    prod.push_back({E, {t}});
    prod.push_back({l2rest, all_legs});
    out = out + materialize_product(prod, big, one);
  }
  return out;
}

TensorOp<Cyclotomic> ModuleV::actF(int N) const {
  // Delta(F) = F (x) 1 + L^{-2} (x) F iterated: sum_t F at leg t, L^{-2} on legs < t.
  LegShape big = LegShape::uniform(N, 3);
  TensorOp<Cyclotomic> out(big);
  Cyclotomic one(root.field, Rational(1));
  for (int t = 1; t <= N; ++t) {
    TensorOp<Cyclotomic> lrest(big);
    for (std::uint64_t idx = 0; idx < big.total(); ++idx) {
      long expo = 0;
      for (int s = 1; s < t; ++s) expo += -2 * (1 - big.digit(idx, s));
      lrest.set(idx, idx, root.q_pow(expo));
    }
    std::vector<int> all_legs;
    for (int s = 1; s <= N; ++s) all_legs.push_back(s);
    std::vector<Placed<Cyclotomic>> prod{{F, {t}}, {lrest, all_legs}};
    out = out + materialize_product(prod, big, one);
  }
  return out;
}

ColorId uqsl2_color(int eps, int epsp) {
  if ((eps != 1 && eps != -1) || (epsp != 1 && epsp != -1))
    throw std::invalid_argument("uqsl2_color: signs must be +-1");
  return (eps == 1 ? 0 : 1) + (epsp == 1 ? 0 : 2);
}

std::pair<int, int> uqsl2_signs(ColorId c) {
  if (c < 0 || c > 3) throw std::out_of_range("uqsl2_signs: color in 0..3");
  return {(c & 1) ? -1 : 1, (c & 2) ? -1 : 1};
}

TensorOp<Cyclotomic> uqsl2_L_double_sum_literal(const ModuleV& mod, long theta) {
  const RootData& rd = mod.root;
  long N4 = 4 * rd.ell;
  LegShape sh = LegShape::uniform(2, 3);
  TensorOp<Cyclotomic> out(sh);
  Cyclotomic inv4l(rd.field, Rational(1, N4));
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s) {
      Cyclotomic acc(rd.field);
      for (long i = 0; i < N4; ++i)
        for (long j = 0; j < N4; ++j)
          acc += rd.zeta_pow(theta * i * j) * rd.q_pow(i * (1 - r) + j * (1 - s));
      std::uint64_t idx = sh.pack({r, s});
      out.add(idx, idx, inv4l * acc);
    }
  return out;
}

TensorOp<Cyclotomic> uqsl2_L_double_sum_closed(const ModuleV& mod, long theta) {
  const RootData& rd = mod.root;
  long N4 = 4 * rd.ell;
  if (std::gcd(std::abs(theta) % N4, N4) != 1)
    throw std::invalid_argument("uqsl2_L_double_sum_closed: theta not invertible mod 4l");
  long theta_inv = 0;
  for (long t = 1; t < N4; ++t)
    if ((((theta % N4) + N4) % N4 * t) % N4 == 1) { theta_inv = t; break; }
  LegShape sh = LegShape::uniform(2, 3);
  TensorOp<Cyclotomic> out(sh);
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s) {
      // inner j-sum vanishes unless theta*i + 2(1-s) = 0 mod 4l
      long i0 = (((-2 * (1 - s)) % N4 + N4) % N4 * theta_inv) % N4;
      std::uint64_t idx = sh.pack({r, s});
      out.add(idx, idx, rd.zeta_pow(2 * i0 * (1 - r)));
    }
  return out;
}

namespace {

// [k]_q! = prod_{t=1..k} (q^t - q^{-t})/(q - q^{-1}); must be nonzero for
// k <= l-1 at a primitive 2l-th root — verified before inverting.
Cyclotomic q_factorial(const RootData& rd, int k) {
  Cyclotomic res(rd.field, Rational(1));
  Cyclotomic denom = rd.q - rd.q.inverse();
  for (int t = 1; t <= k; ++t) {
    Cyclotomic num = rd.q_pow(t) - rd.q_pow(-t);
    if (num.is_zero())
      throw std::domain_error("uqsl2: [k]_q! vanishes; root order too small for this k");
    res *= num * denom.inverse();
  }
  return res;
}

TensorOp<Cyclotomic> op_pow(const TensorOp<Cyclotomic>& a, int k, const Cyclotomic& one) {
  TensorOp<Cyclotomic> acc = TensorOp<Cyclotomic>::identity(a.shape(), one);
  for (int t = 0; t < k; ++t) acc = acc * a;
  return acc;
}

}  // namespace

TensorOp<Cyclotomic> uqsl2_R(const ModuleV& mod, int eps, int epsp) {
  const RootData& rd = mod.root;
  Cyclotomic one(rd.field, Rational(1));
  long e = eps == -1 ? 1 : 0;
  LegShape sh2 = LegShape::uniform(2, 3);
  TensorOp<Cyclotomic> out(sh2);
  Cyclotomic qm = rd.q - rd.q.inverse();

  // the zeta double sum factors out of the k-sum
  long theta = (epsp == 1 ? -1 : 1) + 2 * rd.ell * e;
  TensorOp<Cyclotomic> D = uqsl2_L_double_sum_literal(mod, theta);

  for (int k = 0; k <= rd.ell - 1; ++k) {
    Cyclotomic fact = q_factorial(rd, k);
    long binom2 = static_cast<long>(k) * (k - 1) / 2;
    Cyclotomic coeff;
    TensorOp<Cyclotomic> ef(sh2);
    if (epsp == 1) {
      coeff = rd.q_pow(binom2) * qm.pow(k) * fact.inverse();
      // (L^i E^k) (x) (L^j F^k): the L part is D, applied after E^k (x) F^k
      ef = kron(op_pow(mod.E, k, one), op_pow(mod.F, k, one));
      out = out + (D * ef).scaled(coeff);
    } else {
      coeff = rd.q_pow(-binom2) * (-qm).pow(k) * fact.inverse();
      // (F^k L^i) (x) (E^k L^j): the L part acts first
      ef = kron(op_pow(mod.F, k, one), op_pow(mod.E, k, one));
      out = out + (ef * D).scaled(coeff);
    }
  }
  return out;
}

QFamily<Cyclotomic> uqsl2_family(const ModuleV& mod) {
  QFamily<Cyclotomic> fam;
  fam.local_dim = 3;
  fam.name = "uqsl2(l=" + std::to_string(mod.root.ell) + ")";
  fam.unit = Cyclotomic(mod.root.field, Rational(1));
  for (ColorId c = 0; c < 4; ++c) {
    auto [eps, epsp] = uqsl2_signs(c);
    fam.members.emplace(c, uqsl2_R(mod, eps, epsp));
  }
  // R^{(eps,-eps')} = tau(R^{(eps,eps')})^{-1}, so the inverse of a member is
  // the flip of its primed-sign partner.
  for (ColorId c = 0; c < 4; ++c) {
    auto [eps, epsp] = uqsl2_signs(c);
    fam.inverses.emplace(c, block_swap(fam.members.at(uqsl2_color(eps, -epsp))));
  }
  return fam;
}

bool uqsl2_module_relations_check(const ModuleV& mod, int N) {
  const RootData& rd = mod.root;
  Cyclotomic one(rd.field, Rational(1));
  LegShape big = LegShape::uniform(N, 3);
  TensorOp<Cyclotomic> E = mod.actE(N), F = mod.actF(N), L = mod.actL(N);
  TensorOp<Cyclotomic> id = TensorOp<Cyclotomic>::identity(big, one);

  // [E,F] = (L^2 - L^{-2})/(q - q^{-1})
  Cyclotomic qminv = (rd.q - rd.q.inverse()).inverse();
  TensorOp<Cyclotomic> lhs = E * F - F * E;
  TensorOp<Cyclotomic> rhs = (mod.actL2(N, 2) - mod.actL2(N, -2)).scaled(qminv);
  if (lhs != rhs) return false;
  // L E L^{-1} = q E and L F L^{-1} = q^{-1} F
  TensorOp<Cyclotomic> linv = mod.actL2(N, -1);
  if (L * E * linv != E.scaled(rd.q)) return false;
  if (L * F * linv != F.scaled(rd.q.inverse())) return false;
  // E^l = F^l = 0, L^{2l} = 1
  if (!op_pow(E, rd.ell, one).is_zero()) return false;
  if (!op_pow(F, rd.ell, one).is_zero()) return false;
  return mod.actL2(N, 2 * rd.ell) == id;
}

bool uqsl2_intertwiner_check(const ModuleV& mod) {
  const RootData& rd = mod.root;
  Cyclotomic one(rd.field, Rational(1));
  LegShape sh2 = LegShape::uniform(2, 3);
  TensorOp<Cyclotomic> tau = perm_op<Cyclotomic>(Permutation({2, 1}), sh2, one);

  std::vector<TensorOp<Cyclotomic>> gens{mod.actE(2), mod.actF(2), mod.actL(2)};
  for (ColorId c = 0; c < 4; ++c) {
    auto [eps, epsp] = uqsl2_signs(c);
    TensorOp<Cyclotomic> R = uqsl2_R(mod, eps, epsp);
    for (const auto& dh : gens) {
      TensorOp<Cyclotomic> dop = tau * dh * tau;
      if (R * dh != dop * R) return false;
    }
  }
  return true;
}

CounterexampleResult uqsl2_counterexample(const ModuleV& mod) {
  const RootData& rd = mod.root;
  if (2 * rd.ell <= 4) throw std::invalid_argument("uqsl2_counterexample: 2l > 4 required");
  Cyclotomic one(rd.field, Rational(1));
  LegShape big = LegShape::uniform(4, 3);
  CounterexampleResult res;

  TensorOp<Cyclotomic> R = uqsl2_R(mod, 1, 1);
  // Delta_{H(x)H}(F) = F_1 + (L^{-2})_1 F_3 acting on V^{(x)4}
  std::vector<int> all{1, 2, 3, 4};
  TensorOp<Cyclotomic> l2(big);
  for (std::uint64_t idx = 0; idx < big.total(); ++idx)
    l2.set(idx, idx, rd.q_pow(-2 * (1 - big.digit(idx, 1))));
  TensorOp<Cyclotomic> deltaF =
      embed(mod.F, {1}, big) + l2 * embed(mod.F, {3}, big);

  SparseVec<Cyclotomic> u{{big.pack({2, 1, 2, 2}), one}};
  res.delta_f_kills_u = deltaF.apply(u).empty();

  SparseVec<Cyclotomic> w = apply_product<Cyclotomic>({{R, {1, 4}}, {R, {3, 2}}}, big, u);
  Cyclotomic q2 = rd.q_pow(2);
  Cyclotomic q41 = rd.q_pow(4) - one;
  SparseVec<Cyclotomic> expect{{big.pack({2, 1, 2, 2}), q2}, {big.pack({2, 2, 1, 2}), q41}};
  res.intermediate_matches = (w == expect);

  SparseVec<Cyclotomic> fin;
  for (const auto& [k, v] : deltaF.apply(w)) fin.emplace(k, v);
  res.coefficient = q2 * q41;
  SparseVec<Cyclotomic> expect_fin{{big.pack({2, 2, 2, 2}), res.coefficient}};
  res.final_matches = (fin == expect_fin);
  res.nonzero = !res.coefficient.is_zero();
  return res;
}

bool uqsl2_diag_hom_check(const ModuleV& mod, const std::vector<ColorId>& colors) {
  int n = static_cast<int>(colors.size()) + 1;
  const RootData& rd = mod.root;
  Cyclotomic one(rd.field, Rational(1));
  LegShape big = LegShape::uniform(n, 3);

  QFamily<Cyclotomic> fam = uqsl2_family(mod);
  std::vector<Placed<Cyclotomic>> prod;
  for (int i = 1; i <= n - 1; ++i)
    prod.push_back({fam.member(colors[static_cast<std::size_t>(i - 1)]), {i, n}});
  TensorOp<Cyclotomic> A = materialize_product(prod, big, one);

  // rotation sending Sweedler slot 1 to the last leg
  std::vector<int> rot;
  for (int t = 2; t <= n; ++t) rot.push_back(t);
  rot.push_back(1);
  TensorOp<Cyclotomic> Q = perm_op<Cyclotomic>(Permutation(rot), big, one);
  TensorOp<Cyclotomic> Qinv = invert(Q);

  for (const TensorOp<Cyclotomic>& H : {mod.actE(n), mod.actF(n), mod.actL(n)}) {
    if (A * H != (Q * H * Qinv) * A) return false;
  }
  return true;
}

}  // namespace yblab
