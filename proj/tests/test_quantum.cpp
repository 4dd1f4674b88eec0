#include "doctest.h"

#include "yblab/quantum/family.hpp"

using namespace yblab;

TEST_CASE("standard q R-matrix") {
  TensorOp<RatFuncQ> r1 = standard_qR(1);
  CHECK(r1.at(0, 0) == RatFuncQ::q());

  TensorOp<RatFuncQ> R = standard_qR(2);
  RatFuncQ q = RatFuncQ::q();
  LegShape sh = LegShape::uniform(2, 2);
  CHECK(R.at(sh.pack({0, 0}), sh.pack({0, 0})) == q);
  CHECK(R.at(sh.pack({0, 1}), sh.pack({0, 1})) == RatFuncQ(1));
  CHECK(R.at(sh.pack({1, 0}), sh.pack({1, 0})) == RatFuncQ(1));
  CHECK(R.at(sh.pack({1, 1}), sh.pack({1, 1})) == q);
  CHECK(R.at(sh.pack({1, 0}), sh.pack({0, 1})) == q - q.inverse());
  CHECK(R.nnz() == 5);

  CHECK(qybe_check(R));
  CHECK(qybe_check(standard_qR(3)));

  // breaking the off-diagonal entry breaks QYBE
  TensorOp<RatFuncQ> bad = R;
  bad.set(sh.pack({1, 0}), sh.pack({0, 1}), RatFuncQ(1));
  CHECK(!qybe_check(bad));
}

TEST_CASE("r_eps and the pair family") {
  TensorOp<RatFuncQ> R = standard_qR(2);
  CHECK(r_eps(R, 1) == R);
  CHECK(r_eps(r_eps(R, -1), -1) == R);
  CHECK(qybe_check(r_eps(R, -1)));

  QFamily<RatFuncQ> fam = pair_family(R, "standard-quantum(m=2)");
  CHECK(fam.member(kColorMinus) == r_eps(R, -1));
  LegShape sh = LegShape::uniform(2, 2);
  for (ColorId c : fam.palette())
    CHECK(fam.member(c) * fam.inverse(c) == TensorOp<RatFuncQ>::identity(sh, RatFuncQ(1)));
  CHECK(family_trans_qybe_all(fam));
  CHECK_THROWS_AS(trans_qybe_check(fam, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("identity solves QYBE") {
  CHECK(qybe_check(TensorOp<RatFuncQ>::identity(LegShape::uniform(2, 2), RatFuncQ(1))));
}

TEST_CASE("big product R^(a)") {
  QFamily<RatFuncQ> fam = pair_family(standard_qR(2), "standard-quantum(m=2)");

  // n = 1: R^{(eps)} itself
  TransMatrix a1(1, kColorMinus);
  CHECK(build_R_product(fam, a1) == fam.member(kColorMinus));

  // all-plus eps(id, 1...1) equals R(sigma_id, 1...1)
  SignedPermData s{Permutation::identity(2), {1, 1}};
  TransMatrix eps = eps_of_signed_perm(s);
  CHECK(build_R_product(fam, eps) == build_Rcd(fam, sigma_of_perm(s.w), {kColorPlus, kColorPlus}));

  // some non-transitive sign matrix fails QYBE
  bool found = false;
  TransMatrix m3(3);
  for (int x = 0; x < (1 << 9) && !found; ++x) {
    int v = x;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        m3.set(i, j, v & 1);
        v >>= 1;
      }
    if (is_transitive_matrix(m3)) continue;
    if (!qybe_check(build_R_product(fam, m3))) found = true;
  }
  CHECK(found);
}

TEST_CASE("twist J_c: base cases and recursions") {
  QFamily<RatFuncQ> fam = pair_family(standard_qR(2), "standard-quantum(m=2)");

  TransArray c1(1);
  CHECK(build_Jc(fam, c1) == TensorOp<RatFuncQ>::identity(LegShape::uniform(2, 2), RatFuncQ(1)));

  TransArray c2(2);
  c2.set(1, 2, kColorMinus);
  LegShape sh4 = LegShape::uniform(4, 2);
  CHECK(build_Jc(fam, c2) == embed(fam.member(kColorMinus), {2, 3}, sh4));

  enumerate_transitive_arrays(3, 2, [&](const TransArray& c) {
    CHECK(jc_recursion_check(fam, c));
  });
}

TEST_CASE("twisted R-matrices solve QYBE and match the big product") {
  QFamily<RatFuncQ> fam = pair_family(standard_qR(2), "standard-quantum(m=2)");

  TransArray c1(1);
  CHECK(build_Rcd(fam, c1, {kColorMinus}) == fam.member(kColorMinus));

  // n = 2: all c, all d
  enumerate_transitive_arrays(2, 2, [&](const TransArray& c) {
    for (ColorId d1 : {0, 1})
      for (ColorId d2 : {0, 1}) CHECK(qybe_check(build_Rcd(fam, c, {d1, d2})));
  });

  // signed-permutation comparison at n = 2
  Permutation::for_each(2, [&](const Permutation& w) {
    for (int m = 0; m < 4; ++m)
      CHECK(spec_trans_conj_check(fam, w, {(m & 1) ? 1 : -1, (m & 2) ? 1 : -1}));
  });
}

TEST_CASE("braid identity over the standard family") {
  QFamily<RatFuncQ> fam = pair_family(standard_qR(2), "standard-quantum(m=2)");
  int pass = 0, total = 0, nt_fail = 0, nt_total = 0;
  for (ColorId g = 0; g < 2; ++g)
    for (ColorId a1 = 0; a1 < 2; ++a1)
      for (ColorId a2 = 0; a2 < 2; ++a2) {
        TransArray gm(2);
        gm.set(1, 2, g);
        std::vector<ColorId> alpha{a1, a2};
        bool tr = is_transitive_array(extend(gm, alpha));
        bool ok = braid_identity_check(fam, gm, alpha);
        if (tr) {
          ++total;
          pass += ok;
        } else {
          ++nt_total;
          nt_fail += !ok;
        }
      }
  CHECK(total == 6);
  CHECK(pass == 6);
  CHECK(nt_total == 2);
  CHECK(nt_fail == 2);
}

TEST_CASE("quantum conjecture scan at n = 2") {
  QFamily<RatFuncQ> fam = pair_family(standard_qR(2), "standard-quantum(m=2)");
  ScanReport rep = conjecture_quantum_scan(fam, 2);
  CHECK(rep.total == 10);
  CHECK(rep.passed == 10);
}
