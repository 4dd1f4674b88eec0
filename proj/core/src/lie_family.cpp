#include "yblab/lie/family.hpp"

#include <array>
#include <sstream>

namespace yblab {

LieTensor standard_glm_r(int m) {
  auto g = gl(m);
  LieTensor r(g, 2);
  for (int i = 1; i <= m; ++i) r.add({gl_index(m, i, i), gl_index(m, i, i), -1}, Rational(1));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      r.add({gl_index(m, i, j), gl_index(m, j, i), -1}, Rational(2));
  return r;
}

LieTensor glm_casimir(int m) {
  auto g = gl(m);
  LieTensor w(g, 2);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) w.add({gl_index(m, a, b), gl_index(m, b, a), -1}, Rational(1));
  return w;
}

RFamily standard_classical_family(int m) {
  RFamily fam;
  fam.alg = gl(m);
  LieTensor r = standard_glm_r(m);
  fam.members.emplace(kColorPlus, r);
  fam.members.emplace(kColorMinus, -r.tau());
  fam.name = "standard-classical(gl" + std::to_string(m) + ")";
  return fam;
}

LieTensor skew_glm_r(int m) {
  auto g = gl(m);
  LieTensor r(g, 2);
  for (int t = 1; t <= m; ++t) {
    Rational dt(2 - (t == 1 ? 1 : 0) - (t == m ? 1 : 0));
    if (dt.is_zero()) continue;
    r.add({gl_index(m, 1, t), gl_index(m, t, m), -1}, dt);
    r.add({gl_index(m, t, m), gl_index(m, 1, t), -1}, -dt);
  }
  return r;
}

LieTensor takiff_hat(const LieAlgebra::Ptr& t, const LieTensor& r_on_g) {
  // v-part indices are 0..d-1, x-part d..2d-1; f = id maps x_a to v_a.
  int d = t->dim() / 2;
  LieTensor out(t, 2);
  for (const auto& [k, v] : r_on_g.terms()) {
    out.add({k[0], k[1] + d, -1}, v);  // f (x) id
    out.add({k[0] + d, k[1], -1}, v);  // id (x) f
  }
  return out;
}

LieTensor takiff_omega(const LieAlgebra::Ptr& t, const LieTensor& omega_on_g) {
  LieTensor out(t, 2);
  for (const auto& [k, v] : omega_on_g.terms()) out.add({k[0], k[1], -1}, v);
  return out;
}

RFamily takiff_family(int m, const std::vector<Rational>& lambdas) {
  RFamily fam;
  auto g = gl(m);
  fam.alg = takiff(g);
  LieTensor rhat = takiff_hat(fam.alg, skew_glm_r(m));
  LieTensor omega = takiff_omega(fam.alg, glm_casimir(m));
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    fam.members.emplace(static_cast<ColorId>(i), rhat + omega.scaled(lambdas[i]));
  fam.name = "takiff(gl" + std::to_string(m) + ")";
  return fam;
}

bool transitive_cybe_check(const RFamily& fam, ColorId c, ColorId cp, ColorId cpp) {
  if (cp != c && cp != cpp)
    throw std::invalid_argument("transitive_cybe_check: c' must lie in {c, c''}");
  const LieTensor& rc = fam.member(c);
  const LieTensor& rp = fam.member(cp);
  const LieTensor& rpp = fam.member(cpp);
  LieTensor s = bracket_placed(rc, 1, 2, rp, 1, 3);
  s = s + bracket_placed(rc, 1, 2, rpp, 2, 3);
  s = s + bracket_placed(rp, 1, 3, rpp, 2, 3);
  return s.is_zero();
}

bool family_transitive_cybe_all(const RFamily& fam) {
  auto pal = fam.palette();
  for (ColorId c : pal)
    for (ColorId cpp : pal)
      for (ColorId cp : {c, cpp})
        if (!transitive_cybe_check(fam, c, cp, cpp)) return false;
  return true;
}

LieTensor place_pair(const LieTensor& r, const LieAlgebra::Ptr& sum_alg, int n, int c1, int c2) {
  if (c1 < 0 || c1 >= n || c2 < 0 || c2 >= n) throw std::out_of_range("place_pair: copy index");
  int d = r.algebra()->dim();
  LieTensor out(sum_alg, 2);
  for (const auto& [k, v] : r.terms()) out.add({c1 * d + k[0], c2 * d + k[1], -1}, v);
  return out;
}

LieTensor build_repsmat(const RFamily& fam, const TransMatrix& a, const LieAlgebra::Ptr& sum_alg) {
  int n = a.size();
  LieTensor out(sum_alg, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out = out + place_pair(fam.member(a(i, j)), sum_alg, n, j - 1, i - 1);
  return out;
}

LieTensor build_jc(const RFamily& fam, const TransArray& c, const LieAlgebra::Ptr& sum_alg) {
  int n = c.size();
  LieTensor out(sum_alg, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out = out + place_pair(fam.member(c(i, j)), sum_alg, n, j - 1, i - 1);
  return out;
}

LieTensor build_r0(const RFamily& fam, const std::vector<ColorId>& d, const LieAlgebra::Ptr& sum_alg) {
  int n = static_cast<int>(d.size());
  LieTensor out(sum_alg, 2);
  for (int i = 0; i < n; ++i)
    out = out + place_pair(fam.member(d[static_cast<std::size_t>(i)]), sum_alg, n, i, i);
  return out;
}

bool classical_twist_check(const LieTensor& j, const LieTensor& r0) {
  return cybe(r0 + j - j.tau()).is_zero();
}

LieTensor build_rcd(const RFamily& fam, const TransArray& c, const std::vector<ColorId>& d,
                    const LieAlgebra::Ptr& sum_alg) {
  if (static_cast<int>(d.size()) != c.size()) throw std::invalid_argument("build_rcd: |d| != n");
  LieTensor j = build_jc(fam, c, sum_alg);
  return build_r0(fam, d, sum_alg) + j - j.tau();
}

LieTensor build_rcd_literal(const RFamily& fam, const TransArray& c, const std::vector<ColorId>& d,
                            const LieAlgebra::Ptr& sum_alg) {
  int n = c.size();
  LieTensor out = build_r0(fam, d, sum_alg);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const LieTensor& r = fam.member(c(i, j));
      out = out + place_pair(r, sum_alg, n, j - 1, i - 1);
      out = out + place_pair(-r.tau(), sum_alg, n, i - 1, j - 1);
    }
  return out;
}

namespace {
// t in z (x) g: (ad_x (x) id)(t) = 0 for all basis x; g (x) z symmetric.
bool sided_central(const LieTensor& t, bool left) {
  const auto& alg = t.algebra();
  for (int x = 0; x < alg->dim(); ++x) {
    LieTensor acc(alg, 2);
    for (const auto& [k, v] : t.terms()) {
      int slot = left ? 0 : 1;
      for (const auto& [b, c] : alg->bracket(x, k[static_cast<std::size_t>(slot)])) {
        LieTensor::Key nk = k;
        nk[static_cast<std::size_t>(slot)] = b;
        acc.add(nk, v * c);
      }
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}
}  // namespace

bool central_pair_criterion(const RFamily& fam, ColorId cik, ColorId cki) {
  LieTensor t = fam.member(cik) + fam.member(cki).tau();
  return sided_central(t, true) && sided_central(t, false);
}

bool quasi_invariant_check(const LieTensor& repsmat) {
  return invariance_check(repsmat + repsmat.tau());
}

bool quasi_invariant_criterion_matrix(const RFamily& fam, const TransMatrix& a) {
  int n = a.size();
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      if (i != k && !central_pair_criterion(fam, a(i, k), a(k, i))) return false;
  return true;
}

ScanReport conjecture_classical_scan(const RFamily& fam, int n) {
  if (!family_transitive_cybe_all(fam))
    throw std::domain_error("conjecture_classical_scan: family fails the transitive CYBE");
  ScanReport rep;
  rep.family = fam.name;
  rep.check = "cybe(r^(a)) == 0 over all transitive matrices";
  rep.n = n;
  auto sum_alg = direct_sum(fam.alg, n);
  int k = static_cast<int>(fam.members.size());
  enumerate_transitive_matrices(n, k, [&](const TransMatrix& a) {
    ++rep.total;
    LieTensor r = build_repsmat(fam, a, sum_alg);
    LieTensor residual = cybe(r);
    bool qi = quasi_invariant_check(r);
    bool crit = quasi_invariant_criterion_matrix(fam, a);
    if (qi != crit) {
      rep.notes.push_back("quasi-invariance criterion mismatch at " + a.str());
    }
    if (residual.is_zero()) {
      ++rep.passed;
      if (!qi) rep.notes.push_back("cybe ok, not quasi-triangular: " + a.str());
    } else {
      ++rep.failed;
      rep.witnesses.push_back({a.str(), residual.support_size()});
    }
  });
  return rep;
}

bool diag_embed_check(const RFamily& fam, const TransArray& c, const std::vector<ColorId>& d,
                      const LieAlgebra::Ptr& sum_alg) {
  int n = c.size();
  int dim = fam.alg->dim();
  LieTensor rcd = build_rcd(fam, c, d, sum_alg);
  const LieTensor& r0 = fam.members.begin()->second;
  for (int x = 0; x < dim; ++x) {
    LieVec diag;
    for (int copy = 0; copy < n; ++copy) diag.emplace(copy * dim + x, Rational(1));
    LieTensor lhs = delta_r(rcd, diag);
    LieTensor dx = delta_r(r0, x);
    LieTensor rhs(sum_alg, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rhs = rhs + place_pair(dx, sum_alg, n, i, j);
    if (lhs != rhs) return false;
  }
  return true;
}

bool d_independence_check(const RFamily& fam, const TransArray& c, const std::vector<ColorId>& d1,
                          const std::vector<ColorId>& d2, const LieAlgebra::Ptr& sum_alg) {
  LieTensor a = build_rcd(fam, c, d1, sum_alg);
  LieTensor b = build_rcd(fam, c, d2, sum_alg);
  for (int x = 0; x < sum_alg->dim(); ++x)
    if (delta_r(a, x) != delta_r(b, x)) return false;
  return true;
}

namespace {

// Degree-1 generator image: r^{(color)} placed on a pair of legs of
// U(g)^{(x)N}, with the first tensor component on leg l1.
struct PlacedR {
  int l1, l2;
  ColorId color;
  Rational coef;
};

// 3-leg canonical form: key = (leg, basis) triples sorted by leg.
using Legged3 = std::map<std::array<int, 6>, Rational>;

void legged_add(Legged3& m, std::array<int, 6> key, const Rational& v) {
  if (v.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) m.emplace(key, v);
  else {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

// [A, B] for single-placement factors sharing exactly one leg.
void qtr_bracket_terms(const RFamily& fam, const PlacedR& A, const PlacedR& B, Legged3& out) {
  int shared = 0, cnt = 0;
  for (int s : {A.l1, A.l2})
    if (s == B.l1 || s == B.l2) { shared = s; ++cnt; }
  if (cnt == 0) return;  // disjoint legs commute
  if (cnt == 2) throw std::logic_error("qtr_bracket_terms: coincident leg pairs unsupported");
  int aFree = A.l1 == shared ? A.l2 : A.l1;
  int bFree = B.l1 == shared ? B.l2 : B.l1;
  const LieTensor& TA = fam.member(A.color);
  const LieTensor& TB = fam.member(B.color);
  const auto& alg = fam.alg;
  Rational cc = A.coef * B.coef;
  for (const auto& [ka, va] : TA.terms()) {
    int au = A.l1 == shared ? ka[0] : ka[1];
    int aw = A.l1 == shared ? ka[1] : ka[0];
    for (const auto& [kb, vb] : TB.terms()) {
      int bu = B.l1 == shared ? kb[0] : kb[1];
      int bv = B.l1 == shared ? kb[1] : kb[0];
      const LieVec& br = alg->bracket(au, bu);
      if (br.empty()) continue;
      Rational coeff = cc * va * vb;
      for (const auto& [k, c] : br) {
        std::array<std::pair<int, int>, 3> legs{{{shared, k}, {aFree, aw}, {bFree, bv}}};
        std::sort(legs.begin(), legs.end());
        legged_add(out, {legs[0].first, legs[0].second, legs[1].first, legs[1].second,
                         legs[2].first, legs[2].second},
                   coeff * c);
      }
    }
  }
}

void qtr_bracket(const RFamily& fam, const std::vector<PlacedR>& A, const std::vector<PlacedR>& B,
                 const Rational& scale, Legged3& out) {
  Legged3 tmp;
  for (const auto& a : A)
    for (const auto& b : B) qtr_bracket_terms(fam, a, b, tmp);
  for (const auto& [k, v] : tmp) legged_add(out, k, v * scale);
}

// j_gamma^- with local legs 1..2m relabeled through psi (psi[t-1] = image of t).
std::vector<PlacedR> j_minus_placed(const TransArray& gamma, const std::vector<int>& psi) {
  int m = gamma.size();
  std::vector<PlacedR> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      ColorId col = gamma(i, j);
      out.push_back({psi[static_cast<std::size_t>(j - 1)], psi[static_cast<std::size_t>(m + i - 1)],
                     col, Rational(1)});
      out.push_back({psi[static_cast<std::size_t>(j + m - 1)], psi[static_cast<std::size_t>(i - 1)],
                     col, Rational(-1)});
    }
  return out;
}

std::vector<int> range_union(int a1, int b1, int a2, int b2) {
  std::vector<int> v;
  for (int t = a1; t <= b1; ++t) v.push_back(t);
  for (int t = a2; t <= b2; ++t) v.push_back(t);
  return v;
}

}  // namespace

bool key_identity_check(const RFamily& fam, const TransArray& gamma,
                        const std::vector<ColorId>& alpha) {
  int m = gamma.size();
  if (static_cast<int>(alpha.size()) != m)
    throw std::invalid_argument("key_identity_check: |alpha| != m");
  if (m == 1) return true;  // both sides vanish

  auto psiA = range_union(m + 2, 2 * m + 1, 2 * m + 3, 3 * m + 2);
  auto psiB = range_union(1, m, 2 * m + 3, 3 * m + 2);
  auto psiC = range_union(1, m, m + 2, 2 * m + 1);
  auto jA = j_minus_placed(gamma, psiA);
  auto jB = j_minus_placed(gamma, psiB);
  auto jC = j_minus_placed(gamma, psiC);

  Legged3 lhs;
  for (int i = 1; i <= m; ++i) {
    ColorId ai = alpha[static_cast<std::size_t>(i - 1)];
    std::vector<PlacedR> ra{{m + 1, m + 1 + i, ai, Rational(1)},
                            {m + 1, 2 * m + 2 + i, ai, Rational(1)}};
    std::vector<PlacedR> rb{{2 * m + 2, i, ai, Rational(1)},
                            {2 * m + 2, 2 * m + 2 + i, ai, Rational(1)}};
    std::vector<PlacedR> rc{{3 * m + 3, i, ai, Rational(1)},
                            {3 * m + 3, m + 1 + i, ai, Rational(1)}};
    qtr_bracket(fam, jA, ra, Rational(1), lhs);
    qtr_bracket(fam, jB, rb, Rational(-1), lhs);
    qtr_bracket(fam, jC, rc, Rational(1), lhs);
  }

  Legged3 rhs;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      ColorId ai = alpha[static_cast<std::size_t>(i - 1)];
      ColorId aj = alpha[static_cast<std::size_t>(j - 1)];
      qtr_bracket(fam, {{m + 1, i + m + 1, ai, Rational(1)}},
                  {{m + 1, j + 2 * m + 2, aj, Rational(1)}}, Rational(1), rhs);
      qtr_bracket(fam, {{2 * m + 2, i + 2 * m + 2, ai, Rational(1)}},
                  {{2 * m + 2, j, aj, Rational(1)}}, Rational(1), rhs);
      qtr_bracket(fam, {{3 * m + 3, i, ai, Rational(1)}},
                  {{3 * m + 3, j + m + 1, aj, Rational(1)}}, Rational(1), rhs);
    }

  return lhs == rhs;
}

}  // namespace yblab
