#include "doctest.h"

#include "yblab/util/cyclotomic.hpp"
#include "yblab/util/polyz.hpp"
#include "yblab/util/ratfunc.hpp"
#include "yblab/util/rational.hpp"
#include "yblab/util/rng.hpp"
#include "yblab/util/scalar_variant.hpp"

using namespace yblab;

TEST_CASE("rational basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 4).inverse() == Rational(4, 3));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational().inverse(), std::domain_error);
}

TEST_CASE("polyz arithmetic and gcd") {
  PolyZ x = PolyZ::x();
  PolyZ p = x * x - PolyZ(1);           // q^2 - 1
  PolyZ q = x * x - PolyZ(2) * x + PolyZ(1);  // (q-1)^2
  PolyZ g = PolyZ::gcd(p, q);
  CHECK(g == x - PolyZ(1));
  CHECK(p.divide_exact(x - PolyZ(1)) == x + PolyZ(1));
  CHECK((p * q).divide_exact(p) == q);
  CHECK(PolyZ::gcd(PolyZ(), p) == p);
  CHECK(PolyZ::gcd(PolyZ(6), PolyZ(4)) == PolyZ(2));
  // monomial fast path
  CHECK(PolyZ::gcd(PolyZ::monomial(4, 3), PolyZ::monomial(6, 1)) == PolyZ::monomial(2, 1));
  CHECK(p.evaluate(Rational(2)) == Rational(3));
}

TEST_CASE("rational function field") {
  RatFuncQ q = RatFuncQ::q();
  RatFuncQ qm1 = q - q.inverse();  // (q^2-1)/q
  CHECK(qm1 == RatFuncQ(PolyZ::x() * PolyZ::x() - PolyZ(1), PolyZ::x()));
  CHECK(qm1 * q == q * q - RatFuncQ(1));
  CHECK(qm1.inverse() == RatFuncQ(PolyZ::x(), PolyZ::x() * PolyZ::x() - PolyZ(1)));
  CHECK((qm1 / qm1).is_one());
  CHECK(RatFuncQ::q_pow(-3) * RatFuncQ::q_pow(3) == RatFuncQ::one());
  // evaluation
  CHECK(q.evaluate(Rational(1)) == Rational(1));
  CHECK((q * q - RatFuncQ(1)).evaluate(Rational(2)) == Rational(3));
  CHECK_THROWS_AS(qm1.inverse().evaluate(Rational(1)), std::domain_error);
  // canonical form: denominator leading coefficient positive
  RatFuncQ f(PolyZ(1), PolyZ(-2) * PolyZ::x() + PolyZ(0));
  CHECK(f.den().leading() > 0);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == PolyZ::x() - PolyZ(1));
  CHECK(cyclotomic_poly(4) == PolyZ::x() * PolyZ::x() + PolyZ(1));
  // derived: divide x^12-1 by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6
  PolyZ expect = (PolyZ::monomial(1, 12) - PolyZ(1))
                     .divide_exact(cyclotomic_poly(1) * cyclotomic_poly(2) * cyclotomic_poly(3) *
                                   cyclotomic_poly(4) * cyclotomic_poly(6));
  CHECK(cyclotomic_poly(12) == expect);
  CHECK(expect == PolyZ::monomial(1, 4) - PolyZ::monomial(1, 2) + PolyZ(1));
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("cyclotomic field arithmetic") {
  auto F4 = CycField::get(4);
  auto z4 = Cyclotomic::zeta(F4);
  CHECK(z4 * z4 == Cyclotomic(F4, Rational(-1)));

  auto F12 = CycField::get(12);
  auto z = Cyclotomic::zeta(F12);
  // derived oracle: inverse is zeta^11 reduced mod Phi_12, product check = 1
  CHECK(z.inverse() == z.pow(11));
  CHECK((z * z.inverse()).is_one());
  // q = zeta^2 is a primitive 2l-th root for N = 4l, l = 3
  auto q = z * z;
  CHECK(q.pow(6).is_one());
  for (long k = 1; k < 6; ++k) CHECK(!q.pow(k).is_one());
}

TEST_CASE("field axioms on random triples") {
  Rng rng(20240817);
  auto F12 = CycField::get(12);
  for (int t = 0; t < 40; ++t) {
    Rational a = rng.rational(50), b = rng.rational(50), c = rng.rational(50);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * a.inverse() == Rational(1));
    CHECK((a - b == Rational()) == (a == b));

    RatFuncQ fa = RatFuncQ(PolyZ(rng.integer(9))) + RatFuncQ::q_pow(rng.integer(3));
    RatFuncQ fb = RatFuncQ(PolyZ(rng.integer(9))) * RatFuncQ::q() + RatFuncQ(1);
    RatFuncQ fc = RatFuncQ::q_pow(rng.integer(2)) - RatFuncQ(PolyZ(rng.integer(5)));
    CHECK((fa + fb) * fc == fa * fc + fb * fc);
    if (!fa.is_zero()) CHECK((fa * fa.inverse()).is_one());

    Cyclotomic za = Cyclotomic::zeta(F12, rng.integer(11)) * Cyclotomic(F12, rng.rational(9));
    Cyclotomic zb = Cyclotomic::zeta(F12, rng.integer(11)) + Cyclotomic(F12, rng.rational(9));
    Cyclotomic zc = Cyclotomic::zeta(F12, rng.integer(11));
    CHECK((za + zb) * zc == za * zc + zb * zc);
    if (!za.is_zero()) CHECK((za * za.inverse()).is_one());
  }
}

TEST_CASE("variant scalar dispatch and domain mismatch") {
  AnyScalar a = Rational(1, 2), b = Rational(1, 3);
  CHECK(std::get<Rational>(field_arith(a, b, FieldOp::add)) == Rational(5, 6));
  AnyScalar f = RatFuncQ::q();
  CHECK_THROWS_AS(field_arith(a, f, FieldOp::mul), DomainMismatch);
  CHECK(std::get<Rational>(invert(a)) == Rational(2));
}
