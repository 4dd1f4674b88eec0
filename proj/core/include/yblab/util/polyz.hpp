#pragma once

#include <string>
#include <vector>

#include "yblab/util/rational.hpp"

namespace yblab {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// Invariant: no trailing zero coefficients; the zero polynomial has empty storage.
class PolyZ {
 public:
  PolyZ() = default;
  PolyZ(long c) { if (c != 0) c_.push_back(BigInt(c)); }
  PolyZ(const BigInt& c) { if (c != 0) c_.push_back(c); }
  explicit PolyZ(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolyZ x() { return monomial(1, 1); }
  static PolyZ monomial(const BigInt& coeff, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const BigInt& leading() const;
  const BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  // Largest k with x^k | p (0 for p with nonzero constant term; 0 for zero poly).
  std::size_t valuation() const;
  bool is_monomial() const;

  PolyZ operator-() const;
  friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  PolyZ& operator+=(const PolyZ& o) { *this = *this + o; return *this; }
  PolyZ& operator-=(const PolyZ& o) { *this = *this - o; return *this; }
  PolyZ& operator*=(const PolyZ& o) { *this = *this * o; return *this; }

  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyZ& a, const PolyZ& b) { return !(a == b); }

  PolyZ mul_xk(std::size_t k) const;   // p * x^k
  PolyZ div_xk(std::size_t k) const;   // p / x^k, requires valuation() >= k

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  PolyZ primitive_part() const;

  // Exact division; throws if the remainder is nonzero.
  PolyZ divide_exact(const PolyZ& d) const;
  // Euclidean division in Q[x] scaled to stay in Z[x]: returns true and sets q, r
  // with lc(d)^k * this = q*d + r, deg r < deg d (pseudo-division).
  void pseudo_divmod(const PolyZ& d, PolyZ& q, PolyZ& r) const;

  static PolyZ gcd(const PolyZ& a, const PolyZ& b);

  Rational evaluate(const Rational& v) const;
  BigInt evaluate_int(const BigInt& v) const;

  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace yblab
