#pragma once

#include <memory>
#include <string>
#include <vector>

#include "yblab/util/polyz.hpp"

namespace yblab {

// Q(zeta_N): residues modulo the N-th cyclotomic polynomial Phi_N.
// Phi_N is computed once per order and shared; elements store phi(N)
// rational coefficients, so equality of canonical forms decides equality.

PolyZ cyclotomic_poly(unsigned N);
unsigned euler_phi(unsigned N);

class CycField;
using CycFieldPtr = std::shared_ptr<const CycField>;

class CycField : public std::enable_shared_from_this<CycField> {
 public:
  static CycFieldPtr get(unsigned N);  // cached per order

  unsigned order() const { return n_; }
  unsigned degree() const { return deg_; }
  const PolyZ& modulus() const { return phi_; }

 private:
  explicit CycField(unsigned N);
  unsigned n_;
  PolyZ phi_;
  unsigned deg_;
};

class Cyclotomic {
 public:
  // Default-constructed value is the zero of every order: it absorbs
  // multiplication and is the neutral element of addition, so generic sparse
  // containers can use Cyclotomic() without knowing the field order.
  Cyclotomic() = default;
  explicit Cyclotomic(CycFieldPtr f) : f_(std::move(f)), c_(f_->degree(), Rational()) {}
  Cyclotomic(CycFieldPtr f, const Rational& r) : Cyclotomic(std::move(f)) {
    if (!c_.empty()) c_[0] = r;
  }

  static Cyclotomic zeta(const CycFieldPtr& f, long power = 1);

  const CycFieldPtr& field() const { return f_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
  Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
  Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }
  Cyclotomic& operator/=(const Cyclotomic& o) { *this = *this / o; return *this; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inverse() const;  // extended Euclid modulo Phi_N
  Cyclotomic pow(long e) const;

  std::string str() const;

 private:
  void check_same(const Cyclotomic& o) const;
  CycFieldPtr f_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

}  // namespace yblab
