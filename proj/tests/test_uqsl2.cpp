#include "doctest.h"

#include "yblab/uqsl2/uqsl2.hpp"

using namespace yblab;

static const ModuleV& mod3() {
  static ModuleV m(3);
  return m;
}

TEST_CASE("root data and module") {
  const ModuleV& m = mod3();
  const RootData& rd = m.root;
  CHECK(rd.q.pow(6).is_one());
  for (int k = 1; k < 6; ++k) CHECK(!rd.q.pow(k).is_one());

  // L action is diag(q, 1, q^{-1})
  CHECK(m.L.at(0, 0) == rd.q);
  CHECK(m.L.at(1, 1) == Cyclotomic(rd.field, Rational(1)));
  CHECK(m.L.at(2, 2) == rd.q.inverse());

  for (int N : {1, 2, 3}) CHECK(uqsl2_module_relations_check(m, N));
}

TEST_CASE("L double sum closed form matches literal summation") {
  const ModuleV& m = mod3();
  for (long theta : {-1L, 1L, -1L + 6L, 1L + 6L}) {
    CHECK(uqsl2_L_double_sum_literal(m, theta) == uqsl2_L_double_sum_closed(m, theta));
  }
  // for eps = +1 the eigenvalue on v_r (x) v_s is q^{-theta*2(1-r)(1-s)}
  TensorOp<Cyclotomic> D = uqsl2_L_double_sum_literal(m, -1);
  LegShape sh = LegShape::uniform(2, 3);
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s)
      CHECK(D.at(sh.pack({r, s}), sh.pack({r, s})) == m.root.q_pow(2 * (1 - r) * (1 - s)));
}

TEST_CASE("four R-matrices: QYBE, tau-inverse, intertwining") {
  const ModuleV& m = mod3();
  QFamily<Cyclotomic> fam = uqsl2_family(m);
  LegShape sh2 = LegShape::uniform(2, 3);
  TensorOp<Cyclotomic> id2 = TensorOp<Cyclotomic>::identity(sh2, fam.unit);

  for (ColorId c = 0; c < 4; ++c) {
    CHECK(fam.member(c) * fam.inverse(c) == id2);
    CHECK(qybe_check(fam.member(c)));
  }
  // R^{(eps,-eps')} = tau(R^{(eps,eps')})^{-1}
  for (int eps : {1, -1})
    for (int epsp : {1, -1})
      CHECK(uqsl2_R(m, eps, -epsp) == invert(block_swap(uqsl2_R(m, eps, epsp))));

  CHECK(uqsl2_intertwiner_check(m));
}

TEST_CASE("transitive QYBE for the four-member family") {
  QFamily<Cyclotomic> fam = uqsl2_family(mod3());
  CHECK(family_trans_qybe_all(fam));
}

TEST_CASE("counterexample computation") {
  CounterexampleResult res = uqsl2_counterexample(mod3());
  CHECK(res.delta_f_kills_u);
  CHECK(res.intermediate_matches);
  CHECK(res.final_matches);
  CHECK(res.nonzero);
  const RootData& rd = mod3().root;
  CHECK(res.coefficient == rd.q_pow(2) * (rd.q_pow(4) - Cyclotomic(rd.field, Rational(1))));
}

TEST_CASE("diagonal homomorphism identity on modules") {
  const ModuleV& m = mod3();
  for (ColorId c1 = 0; c1 < 4; ++c1) {
    CHECK(uqsl2_diag_hom_check(m, {c1}));
  }
  CHECK(uqsl2_diag_hom_check(m, {0, 3}));
  CHECK(uqsl2_diag_hom_check(m, {2, 1}));
}

TEST_CASE("q-factorial guard") {
  // l = 3 admits k <= 2 only; uqsl2_R never exceeds it, but the guard trips
  // if the root order is too small for a requested power
  CHECK_THROWS_AS(ModuleV(2), std::invalid_argument);
}
