#include "yblab/util/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace yblab {

unsigned euler_phi(unsigned N) {
  unsigned r = N;
  for (unsigned p = 2; p * p <= N; ++p) {
    if (N % p == 0) {
      r -= r / p;
      while (N % p == 0) N /= p;
    }
  }
  if (N > 1) r -= r / N;
  return r;
}

// Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
PolyZ cyclotomic_poly(unsigned N) {
  if (N == 0) throw std::domain_error("cyclotomic_poly: N must be positive");
  static std::map<unsigned, PolyZ> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  std::vector<unsigned> pending{N};
  while (!pending.empty()) {
    unsigned n = pending.back();
    if (cache.count(n)) { pending.pop_back(); continue; }
    bool ready = true;
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0 && !cache.count(d)) { pending.push_back(d); ready = false; }
    if (!ready) continue;
    pending.pop_back();
    PolyZ xn1 = PolyZ::monomial(1, n) - PolyZ(1);
    PolyZ div(1);
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0) div *= cache.at(d);
    cache.emplace(n, xn1.divide_exact(div));
  }
  return cache.at(N);
}

CycField::CycField(unsigned N) : n_(N), phi_(cyclotomic_poly(N)) {
  deg_ = static_cast<unsigned>(phi_.degree());
}

CycFieldPtr CycField::get(unsigned N) {
  static std::map<unsigned, CycFieldPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it == cache.end())
    it = cache.emplace(N, CycFieldPtr(new CycField(N))).first;
  return it->second;
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (!f_ || !o.f_ || f_->order() != o.f_->order())
    throw std::domain_error("Cyclotomic: mixed field orders");
}

bool Cyclotomic::is_zero() const {
  for (const auto& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (c_.empty() || !c_[0].is_one()) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (!a.f_) return b.is_zero();
  if (!b.f_) return a.is_zero();
  a.check_same(b);
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (!a.f_) return b;
  if (!b.f_) return a;
  a.check_same(b);
  Cyclotomic r(a);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

namespace {
// Reduce a rational-coefficient polynomial (dense, low-to-high) modulo the
// monic integer polynomial phi, in place.
void reduce_mod(std::vector<Rational>& p, const PolyZ& phi) {
  const std::size_t d = static_cast<std::size_t>(phi.degree());
  for (std::size_t i = p.size(); i-- > d;) {
    Rational lead = p[i];
    if (lead.is_zero()) continue;
    p[i] = Rational();
    for (std::size_t j = 0; j < d; ++j)
      p[i - d + j] -= lead * Rational(phi.coeff(j));
  }
  p.resize(d);
}
}  // namespace

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (!a.f_ || !b.f_) return Cyclotomic();
  a.check_same(b);
  const std::size_t d = a.c_.size();
  std::vector<Rational> prod(2 * d - 1, Rational());
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  reduce_mod(prod, a.f_->modulus());
  Cyclotomic r(a.f_);
  r.c_ = std::move(prod);
  return r;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (!f_ || is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
  // Extended Euclid for (this, Phi_N) over Q[x]; Phi_N irreducible, so the
  // gcd is a nonzero constant.
  using QP = std::vector<Rational>;  // dense, low-to-high, trimmed
  auto trim = [](QP& p) { while (!p.empty() && p.back().is_zero()) p.pop_back(); };
  auto is0 = [](const QP& p) { return p.empty(); };
  auto sub_scaled = [](QP& p, const QP& q, const Rational& c, std::size_t shift) {
    if (p.size() < q.size() + shift) p.resize(q.size() + shift, Rational());
    for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= c * q[i];
  };

  const PolyZ& phi = f_->modulus();
  QP r0;  // phi
  for (int i = 0; i <= phi.degree(); ++i) r0.push_back(Rational(phi.coeff(static_cast<std::size_t>(i))));
  QP r1(c_);
  trim(r1);
  QP s0{}, s1{Rational(1)};  // coefficients of *this in the Bezout identity

  while (true) {
    // divide r0 by r1: r0 = q*r1 + rem
    QP rem(r0), q;
    while (rem.size() >= r1.size() && !is0(rem)) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1, Rational());
      q[shift] += c;
      sub_scaled(rem, r1, c, shift);
      trim(rem);
    }
    if (is0(rem)) break;
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    QP s2(s0);
    for (std::size_t i = 0; i < q.size(); ++i)
      if (!q[i].is_zero()) sub_scaled(s2, s1, q[i], i);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.size() != 1)
    throw std::logic_error("Cyclotomic: modulus not coprime to element");
  Rational unit = r1[0];
  Cyclotomic inv(f_);
  for (std::size_t i = 0; i < s1.size() && i < inv.c_.size(); ++i) inv.c_[i] = s1[i] / unit;
  if (s1.size() > inv.c_.size()) {
    std::vector<Rational> tmp(s1);
    for (auto& x : tmp) x = x / unit;
    reduce_mod(tmp, phi);
    inv.c_ = std::move(tmp);
  }
  return inv;
}

Cyclotomic Cyclotomic::zeta(const CycFieldPtr& f, long power) {
  long n = static_cast<long>(f->order());
  long k = ((power % n) + n) % n;
  std::vector<Rational> p(static_cast<std::size_t>(k) + 1, Rational());
  p.back() = Rational(1);
  if (p.size() > f->degree()) {
    p.resize(std::max<std::size_t>(p.size(), f->degree()));
    reduce_mod(p, f->modulus());
  } else {
    p.resize(f->degree(), Rational());
  }
  Cyclotomic r(f);
  r.c_ = std::move(p);
  return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (!f_) {
    if (e > 0) return Cyclotomic();
    throw std::domain_error("Cyclotomic: 0^e for e <= 0");
  }
  if (e < 0) return inverse().pow(-e);
  Cyclotomic acc(f_, Rational(1));
  Cyclotomic base(*this);
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].str();
    if (i > 0) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

}  // namespace yblab
