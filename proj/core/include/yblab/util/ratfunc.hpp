#pragma once

#include <stdexcept>
#include <string>

#include "yblab/util/polyz.hpp"

namespace yblab {

// Field of rational functions in one indeterminate q with integer-coefficient
// numerator and denominator.  Canonical form: gcd(num, den) = 1 as polynomials,
// the joint content of all coefficients is 1, and the denominator has positive
// leading coefficient.  Equality is componentwise.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(1) {}
  RatFuncQ(long c) : num_(c), den_(1) {}
  RatFuncQ(const Rational& c) : num_(c.num()), den_(c.den()) { normalize(); }
  RatFuncQ(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
    normalize();
  }
  explicit RatFuncQ(PolyZ num) : num_(std::move(num)), den_(1) { normalize(); }

  static RatFuncQ q() { return RatFuncQ(PolyZ::x()); }
  // q^k for any integer k (negative exponents give monomial denominators).
  static RatFuncQ q_pow(long k) {
    if (k >= 0) return RatFuncQ(PolyZ::monomial(1, static_cast<std::size_t>(k)));
    return RatFuncQ(PolyZ(1), PolyZ::monomial(1, static_cast<std::size_t>(-k)));
  }

  const PolyZ& num() const { return num_; }
  const PolyZ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RatFuncQ operator-() const { RatFuncQ r(*this); r.num_ = -r.num_; return r; }
  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
  RatFuncQ& operator+=(const RatFuncQ& o) { *this = *this + o; return *this; }
  RatFuncQ& operator-=(const RatFuncQ& o) { *this = *this - o; return *this; }
  RatFuncQ& operator*=(const RatFuncQ& o) { *this = *this * o; return *this; }
  RatFuncQ& operator/=(const RatFuncQ& o) { *this = *this / o; return *this; }

  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

  RatFuncQ inverse() const {
    if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
    return RatFuncQ(den_, num_);
  }

  // Exact substitution q := v; throws on a pole.
  Rational evaluate(const Rational& v) const {
    Rational d = den_.evaluate(v);
    if (d.is_zero()) throw std::domain_error("RatFuncQ: pole at evaluation point");
    return num_.evaluate(v) / d;
  }

  std::string str() const;

  static RatFuncQ zero() { return RatFuncQ(); }
  static RatFuncQ one() { return RatFuncQ(1); }

 private:
  void normalize();
  PolyZ num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFuncQ& f);

}  // namespace yblab
