// Acceptance suite: one pass/fail line per criterion, all arithmetic exact.
// Run time target on a small machine is minutes; the stretch-tier scans
// (n = 4 quantum, table rows 8 and 9) are exercised through the CLI flags
// instead of here.

#include <chrono>
#include <iostream>
#include <set>
#include <vector>

#include "yblab/comb/trans.hpp"
#include "yblab/lie/family.hpp"
#include "yblab/poisson/bracket.hpp"
#include "yblab/qmat/twisted.hpp"
#include "yblab/quantum/family.hpp"
#include "yblab/uqsl2/uqsl2.hpp"

using namespace yblab;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool ok, long ms) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << what << " (" << ms
            << " ms)" << std::endl;
  if (!ok) ++g_failures;
}

template <class F>
void criterion(int idx, const std::string& what, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = f();
  } catch (const std::exception& e) {
    std::cout << "  exception: " << e.what() << "\n";
    ok = false;
  }
  auto t1 = std::chrono::steady_clock::now();
  report(idx, what, ok,
         std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
}

std::vector<ColorId> unpack_colors(int mask, int n, int base) {
  std::vector<ColorId> d;
  for (int i = 0; i < n; ++i) {
    d.push_back(mask % base);
    mask /= base;
  }
  return d;
}

bool criterion1_table() {
  static const std::vector<std::vector<long>> expected{
      {1}, {1, 2}, {1, 11, 5}, {1, 59, 69, 14}, {1, 359, 756, 364, 42},
      {1, 2519, 7954, 6700, 1770, 132},
  };
  for (int n = 2; n <= 7; ++n) {
    auto row = stirling_transitive_row(n);
    const auto& exp = expected[static_cast<std::size_t>(n - 2)];
    if (row.size() != exp.size()) return false;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != BigInt(exp[k])) return false;
  }
  return stirling_transitive(5, 2) == BigInt(59) && stirling_transitive(6, 3) == BigInt(756) &&
         stirling_transitive(7, 4) == BigInt(6700);
}

bool criterion2_polynomiality() {
  static const long p3[] = {3, 15, 99, 771, 6693};
  static const long p4[] = {4, 28, 256, 2704, 31192};
  for (int n = 2; n <= 6; ++n) {
    CountingReport rep = counting_formulas(n);
    for (std::size_t i = 0; i < rep.p_counts.size(); ++i)
      if (rep.p_counts[i] != rep.p_values[i]) return false;
    if (!rep.p2_is_factorial) return false;
    if (rep.p_counts[1] != BigInt(p3[n - 2])) return false;
    if (rep.p_counts[2] != BigInt(p4[n - 2])) return false;
  }
  return true;
}

bool criterion3_bn() {
  static const long bn[] = {2, 10, 74, 730, 9002, 133210};
  for (int n = 1; n <= 6; ++n) {
    BigInt direct = count_transitive_matrices(n, 2);
    if (direct != bitransitive_count_formula(n)) return false;
    if (direct != BigInt(bn[n - 1])) return false;
    if (n >= 2 && qn_closed_form(n, direct, BigInt(2)) != direct) return false;
  }
  return true;
}

bool criterion4_catalan_conjecture() {
  static const long conj[] = {11, 69, 364, 1770};  // <n,n-2> for n = 4..7
  for (int n = 4; n <= 7; ++n) {
    auto row = stirling_transitive_row(n);
    if (row[static_cast<std::size_t>(n - 2)] != catalan(n - 1)) return false;      // <n,n-1>
    BigInt expect = BigInt(n - 2) * binomial(2 * n - 3, n) + binomial(2 * (n - 2), n);
    if (expect != BigInt(conj[n - 4])) return false;
    if (row[static_cast<std::size_t>(n - 3)] != expect) return false;               // <n,n-2>
  }
  return true;
}

bool criterion5_bijections() {
  for (int n = 1; n <= 6; ++n) {
    bool ok = true;
    Permutation::for_each(n, [&](const Permutation& w) {
      if (!(perm_of_sigma(sigma_of_perm(w)) == w)) ok = false;
    });
    if (!ok) return false;
  }
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<ColorId>> image;
    bool ok = true;
    Permutation::for_each(n, [&](const Permutation& w) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> d;
        for (int i = 0; i < n; ++i) d.push_back((mask >> i) & 1 ? 1 : -1);
        TransMatrix e = eps_of_signed_perm({w, d});
        if (!is_transitive_matrix(e) || !e.almost_skew()) ok = false;
        image.insert(e.flat());
      }
    });
    std::size_t almost_skew = 0;
    enumerate_transitive_matrices(n, 2, [&](const TransMatrix& a) {
      if (a.almost_skew()) ++almost_skew;
    });
    BigInt expect = factorial(n) * (BigInt(1) << n);
    if (!ok || BigInt(static_cast<long>(image.size())) != expect ||
        BigInt(static_cast<long>(almost_skew)) != expect)
      return false;
  }
  return true;
}

bool criterion6_classical_conjecture() {
  RFamily fam = standard_classical_family(2);
  ScanReport r3 = conjecture_classical_scan(fam, 3);
  if (!(r3.total == 74 && r3.passed == 74)) return false;
  ScanReport r4 = conjecture_classical_scan(fam, 4);
  return r4.total == 730 && r4.passed == 730;
}

bool criterion7_takiff_conjecture() {
  RFamily fam = takiff_family(2, {Rational(0), Rational(1), Rational(2)});
  if (!family_transitive_cybe_all(fam)) return false;
  ScanReport rep = conjecture_classical_scan(fam, 3);
  return rep.total == 231 && rep.passed == 231;
}

bool criterion8_theorem_a() {
  RFamily std2 = standard_classical_family(2);
  for (int n = 1; n <= 4; ++n) {
    auto sum_alg = direct_sum(std2.alg, n);
    bool ok = true;
    enumerate_transitive_arrays(n, 2, [&](const TransArray& c) {
      for (int mask = 0; mask < (1 << n) && ok; ++mask) {
        LieTensor rcd = build_rcd(std2, c, unpack_colors(mask, n, 2), sum_alg);
        auto ax = cobracket_axioms_check(rcd);
        ok = cybe(rcd).is_zero() && ax.antisym && ax.co_jacobi;
      }
    });
    if (!ok) return false;
  }
  RFamily tak = takiff_family(2, {Rational(0), Rational(1), Rational(2)});
  for (int n = 1; n <= 3; ++n) {
    auto sum_alg = direct_sum(tak.alg, n);
    bool ok = true;
    enumerate_transitive_arrays(n, 3, [&](const TransArray& c) {
      int combos = 1;
      for (int i = 0; i < n; ++i) combos *= 3;
      for (int mask = 0; mask < combos && ok; ++mask) {
        LieTensor rcd = build_rcd(tak, c, unpack_colors(mask, n, 3), sum_alg);
        auto ax = cobracket_axioms_check(rcd);
        ok = cybe(rcd).is_zero() && ax.antisym && ax.co_jacobi;
      }
    });
    if (!ok) return false;
  }
  for (int n = 1; n <= 3; ++n) {
    auto a_std = direct_sum(std2.alg, n);
    auto a_tak = direct_sum(tak.alg, n);
    bool ok = true;
    enumerate_transitive_arrays(n, 2, [&](const TransArray& c) {
      if (!diag_embed_check(std2, c, std::vector<ColorId>(static_cast<std::size_t>(n), 0), a_std))
        ok = false;
    });
    enumerate_transitive_arrays(n, 3, [&](const TransArray& c) {
      if (!diag_embed_check(tak, c, std::vector<ColorId>(static_cast<std::size_t>(n), 1), a_tak))
        ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool criterion9_key_identity() {
  RFamily std2 = standard_classical_family(2);
  RFamily tak = takiff_family(2, {Rational(0), Rational(1), Rational(2)});
  for (int m : {2, 3}) {
    for (const RFamily* fam : {&std2, &tak}) {
      int colors = static_cast<int>(fam->members.size());
      bool ok = true;
      enumerate_transitive_arrays(m + 1, colors, [&](const TransArray& ext) {
        TransArray gamma = restrict_minus(ext);
        std::vector<ColorId> alpha;
        for (int i = 1; i <= m; ++i) alpha.push_back(ext(i, m + 1));
        if (!key_identity_check(*fam, gamma, alpha)) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool criterion10_quantum_bc() {
  QFamily<RatFuncQ> fam = pair_family(standard_qR(2), "standard-quantum(m=2)");
  for (int n = 1; n <= 3; ++n) {
    bool ok = true;
    enumerate_transitive_arrays(n, 2, [&](const TransArray& c) {
      for (int mask = 0; mask < (1 << n) && ok; ++mask)
        ok = qybe_check(build_Rcd(fam, c, unpack_colors(mask, n, 2)));
    });
    if (!ok) return false;
    Permutation::for_each(n, [&](const Permutation& w) {
      for (int mask = 0; mask < (1 << n) && ok; ++mask) {
        std::vector<int> d;
        for (int i = 0; i < n; ++i) d.push_back((mask >> i) & 1 ? 1 : -1);
        ok = spec_trans_conj_check(fam, w, d);
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool criterion11_quantum_conjecture() {
  QFamily<RatFuncQ> fam = pair_family(standard_qR(2), "standard-quantum(m=2)");
  ScanReport rep = conjecture_quantum_scan(fam, 3);
  return rep.total == 74 && rep.passed == 74;
}

bool criterion12_braid() {
  QFamily<RatFuncQ> stdq = pair_family(standard_qR(2), "standard-quantum(m=2)");
  QFamily<RatFuncQ> stdq3 = pair_family(standard_qR(3), "standard-quantum(m=3)");
  ModuleV mod(3);
  QFamily<Cyclotomic> uq = uqsl2_family(mod);

  bool nontrans_failure = false;
  for (int m : {2, 3}) {
    bool ok2 = true, ok3 = true, oku = true;
    enumerate_transitive_arrays(m + 1, 2, [&](const TransArray& ext) {
      TransArray gamma = restrict_minus(ext);
      std::vector<ColorId> alpha;
      for (int i = 1; i <= m; ++i) alpha.push_back(ext(i, m + 1));
      if (!braid_identity_check(stdq, gamma, alpha)) ok2 = false;
      if (m == 2 && !braid_identity_check(stdq3, gamma, alpha)) ok3 = false;
    });
    enumerate_transitive_arrays(m + 1, 4, [&](const TransArray& ext) {
      TransArray gamma = restrict_minus(ext);
      std::vector<ColorId> alpha;
      for (int i = 1; i <= m; ++i) alpha.push_back(ext(i, m + 1));
      if (!braid_identity_check(uq, gamma, alpha)) oku = false;
    });
    if (!ok2 || !ok3 || !oku) return false;
  }
  {
    TransArray gm(2);
    gm.set(1, 2, kColorPlus);
    std::vector<ColorId> alpha{kColorMinus, kColorPlus};
    if (is_transitive_array(extend(gm, alpha))) return false;
    nontrans_failure = !braid_identity_check(stdq, gm, alpha);
    if (nontrans_failure)
      std::cout << "  non-transitive braid witness: " << extend(gm, alpha).str() << "\n";
  }
  return nontrans_failure;
}

bool criterion13_uqsl2() {
  ModuleV mod(3);
  QFamily<Cyclotomic> fam = uqsl2_family(mod);
  for (ColorId c = 0; c < 4; ++c) {
    if (!qybe_check(fam.member(c))) return false;
    auto [eps, epsp] = uqsl2_signs(c);
    if (!(uqsl2_R(mod, eps, -epsp) == invert(block_swap(uqsl2_R(mod, eps, epsp))))) return false;
  }
  if (!uqsl2_intertwiner_check(mod)) return false;
  if (!family_trans_qybe_all(fam)) return false;
  ScanReport rep = conjecture_quantum_scan(fam, 2);
  if (!(rep.total == 52 && rep.passed == 52)) return false;
  CounterexampleResult ce = uqsl2_counterexample(mod);
  if (!(ce.delta_f_kills_u && ce.intermediate_matches && ce.final_matches && ce.nonzero))
    return false;
  const RootData& rd = mod.root;
  return ce.coefficient == rd.q_pow(2) * (rd.q_pow(4) - Cyclotomic(rd.field, Rational(1)));
}

bool criterion14_qmatrix() {
  Coquasi cq(2);
  TransArray cid = sigma_of_perm(Permutation::identity(2));
  TransArray csw = sigma_of_perm(Permutation({2, 1}));
  if (!confluence_check(RewriteSystem(2, 1))) return false;
  if (!confluence_check(RewriteSystem(2, cid)) || !confluence_check(RewriteSystem(2, csw)))
    return false;
  if (!coquasi_rule_compatibility(cq, 1) || !coquasi_rule_compatibility(cq, -1)) return false;
  if (!coquasi_braiding_check(cq, 1) || !coquasi_braiding_check(cq, -1)) return false;
  for (const TransArray& c : {cid, csw}) {
    RewriteSystem rs(2, c);
    if (!bullet_associativity_check(rs)) return false;
    if (!bullet_matches_psi(rs, cq, c)) return false;
    if (!qmat_mult_hom_check(rs, 2)) return false;
  }
  bool ok3 = true;
  Permutation::for_each(3, [&](const Permutation& w) {
    RewriteSystem rs(2, sigma_of_perm(w));
    ok3 = ok3 && bullet_associativity_check(rs) && qmat_mult_hom_check(rs, 1);
  });
  if (!ok3) return false;
  RatFuncQ q = RatFuncQ::q();
  NCPoly res = nonisom_witness(2, 2, 1);
  NCPoly expect;
  expect.add({{1, 2, 2}, {2, 1, 1}}, q - q.inverse());
  expect.add({{1, 1, 1}, {2, 2, 2}}, -(q - q.inverse()));
  if (res != expect) return false;
  for (const auto& [w, c] : res.terms())
    if (c.evaluate(Rational(1)) != Rational()) return false;
  return true;
}

bool criterion15_semiclassical() {
  return semiclassical_check_single(2) && semiclassical_check_twisted_n2(2);
}

bool criterion16_poisson() {
  BracketTable single = build_bracket_Amn(1, 2, TransArray(1));
  std::vector<PGen> sg;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) sg.push_back({PKind::X, 1, i, j});
  if (!jacobi_check(single, sg)) return false;
  if (!det_central_check(single)) return false;
  for (int n = 2; n <= 3; ++n) {
    std::vector<PGen> gens;
    for (int leg = 1; leg <= n; ++leg)
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) gens.push_back({PKind::X, leg, i, j});
    bool ok = true;
    enumerate_transitive_arrays(n, 2, [&](const TransArray& c) {
      BracketTable t = build_bracket_Amn(n, 2, c);
      ok = ok && jacobi_check(t, gens) && poisson_mult_hom_check(t, single, gens);
    });
    if (!ok) return false;
  }
  std::vector<Rational> lam{Rational(0), Rational(1), Rational(2)};
  for (int n = 1; n <= 2; ++n)
    for (ColorId col = 0; col < (n == 1 ? 1 : 3); ++col) {
      TransArray c(n);
      if (n == 2) c.set(1, 2, col);
      BracketTable t = build_takiff_tables(2, n, c, lam);
      std::vector<PGen> gens;
      for (int leg = 1; leg <= n; ++leg)
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= 2; ++j) {
            gens.push_back({PKind::Y, leg, i, j});
            gens.push_back({PKind::X, leg, i, j});
            gens.push_back({PKind::XBar, leg, i, j});
          }
      PointCheckConfig cfg;
      cfg.m = 2;
      cfg.n = n;
      cfg.trials = 4;
      if (!numeric_point_check(t, PointIdentity::skew, gens, cfg).passed) return false;
      if (!numeric_point_check(t, PointIdentity::jacobi, gens, cfg).passed) return false;
      if (n == 2) {
        // bracket consistency: leg-1 block equals the single-leg table
        BracketTable t1 = build_takiff_tables(2, 1, TransArray(1), lam);
        for (const auto& [key, val] : t1.entries())
          if (!(t.at(key.first, key.second) == val)) return false;
      }
    }
  return true;
}

}  // namespace

int main() {
  std::cout << "acceptance suite: exact checks, no tolerances\n";
  criterion(1, "generalized Stirling table rows 2..7", criterion1_table);
  criterion(2, "polynomiality cross-checks, n <= 6, |C| in {2,3,4}", criterion2_polynomiality);
  criterion(3, "B_n direct enumeration vs closed forms, n <= 6", criterion3_bn);
  criterion(4, "Catalan column and the <n,n-2> conjecture values, 4 <= n <= 7",
            criterion4_catalan_conjecture);
  criterion(5, "sigma/eps bijections and exhaustion, n <= 6 resp. 5", criterion5_bijections);
  criterion(6, "classical conjecture scan, 74/74 at n=3 and 730/730 at n=4",
            criterion6_classical_conjecture);
  criterion(7, "Takiff three-color scan, 231/231 at n=3", criterion7_takiff_conjecture);
  criterion(8, "r(c,d) instance suite with cobracket axioms and diagonal embedding",
            criterion8_theorem_a);
  criterion(9, "classical key identity, m = 2,3 on both families", criterion9_key_identity);
  criterion(10, "twisted R-matrices solve QYBE, n <= 3; signed-permutation equality",
            criterion10_quantum_bc);
  criterion(11, "quantum conjecture scan, 74/74 at n=3", criterion11_quantum_conjecture);
  criterion(12, "braid relation over both quantum families; non-transitive witness fails",
            criterion12_braid);
  criterion(13, "root-of-unity family: QYBE, intertwiners, 52/52 scan, counterexample value",
            criterion13_uqsl2);
  criterion(14, "quantum matrices: confluence, compatibility, bullet products, witness",
            criterion14_qmatrix);
  criterion(15, "semiclassical limits against the Poisson brackets", criterion15_semiclassical);
  criterion(16, "Poisson suite: Jacobi, multiplication map, determinant, Takiff points",
            criterion16_poisson);

  if (g_failures == 0) {
    std::cout << "acceptance: all 16 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return 1;
}
