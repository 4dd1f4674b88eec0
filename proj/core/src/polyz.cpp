#include "yblab/util/polyz.hpp"

#include <sstream>
#include <stdexcept>

namespace yblab {

void PolyZ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ PolyZ::monomial(const BigInt& coeff, std::size_t deg) {
  PolyZ p;
  if (coeff != 0) {
    p.c_.assign(deg + 1, BigInt(0));
    p.c_[deg] = coeff;
  }
  return p;
}

const BigInt& PolyZ::leading() const {
  if (c_.empty()) throw std::domain_error("PolyZ: leading coefficient of zero");
  return c_.back();
}

std::size_t PolyZ::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

bool PolyZ::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

PolyZ PolyZ::operator-() const {
  PolyZ r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
  PolyZ r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) {
  PolyZ r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.trim();
  return r;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return PolyZ();
  PolyZ r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

PolyZ PolyZ::mul_xk(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  PolyZ r;
  r.c_.assign(c_.size() + k, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

PolyZ PolyZ::div_xk(std::size_t k) const {
  if (k == 0) return *this;
  if (valuation() < k) throw std::domain_error("PolyZ: div_xk valuation too small");
  PolyZ r;
  r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
  return r;
}

BigInt PolyZ::content() const {
  BigInt g(0);
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PolyZ PolyZ::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  PolyZ r(*this);
  for (auto& c : r.c_) c /= g;
  return r;
}

void PolyZ::pseudo_divmod(const PolyZ& d, PolyZ& q, PolyZ& r) const {
  if (d.is_zero()) throw std::domain_error("PolyZ: pseudo-division by zero");
  q = PolyZ();
  r = *this;
  const BigInt& lc = d.leading();
  int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
    PolyZ t = PolyZ::monomial(r.leading(), shift);
    q = q * PolyZ(lc) + t;
    r = r * PolyZ(lc) - t * d;
  }
}

PolyZ PolyZ::divide_exact(const PolyZ& d) const {
  if (d.is_zero()) throw std::domain_error("PolyZ: division by zero");
  if (is_zero()) return PolyZ();
  if (d.degree() == 0) {
    if (d.c_[0] == 1) return *this;
    PolyZ q(*this);
    for (auto& c : q.c_) {
      BigInt r;
      mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.c_[0].get_mpz_t());
      if (r != 0) throw std::domain_error("PolyZ: inexact division");
    }
    return q;
  }
  // Long division tracking exactness at each step.
  PolyZ q, r(*this);
  int dd = d.degree();
  const BigInt& lc = d.leading();
  while (!r.is_zero() && r.degree() >= dd) {
    BigInt c = r.leading() / lc;
    if (c * lc != r.leading()) throw std::domain_error("PolyZ: inexact division");
    PolyZ t = PolyZ::monomial(c, static_cast<std::size_t>(r.degree() - dd));
    q += t;
    r -= t * d;
  }
  if (!r.is_zero()) throw std::domain_error("PolyZ: inexact division (remainder)");
  return q;
}

// Primitive PRS; result has positive leading coefficient and carries the
// gcd of the contents, so it is usable for exact fraction reduction.
PolyZ PolyZ::gcd(const PolyZ& a, const PolyZ& b) {
  auto normalize_sign = [](PolyZ p) { return p.leading() < 0 ? -p : p; };
  if (a.is_zero()) return b.is_zero() ? PolyZ() : normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);

  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

  // Splitting off powers of x makes the frequent Laurent-style reductions
  // (monomial denominators) terminate without entering the PRS loop.
  std::size_t v = std::min(a.valuation(), b.valuation());
  if (a.is_monomial() || b.is_monomial()) return PolyZ(cg).mul_xk(v);
  PolyZ g = a.primitive_part();
  PolyZ h = b.primitive_part();
  g = g.div_xk(g.valuation());
  h = h.div_xk(h.valuation());
  if (g.degree() < h.degree()) std::swap(g, h);
  while (!h.is_zero()) {
    if (h.degree() == 0) { g = PolyZ(1); break; }
    PolyZ q, r;
    g.pseudo_divmod(h, q, r);
    g = h;
    h = r.primitive_part();
  }
  return normalize_sign(g.primitive_part() * PolyZ(cg)).mul_xk(v);
}

Rational PolyZ::evaluate(const Rational& v) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + Rational(c_[i]);
  return acc;
}

BigInt PolyZ::evaluate_int(const BigInt& v) const {
  BigInt acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

std::string PolyZ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    BigInt c = c_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace yblab
