#include "yblab/util/ratfunc.hpp"

#include <sstream>

namespace yblab {

void RatFuncQ::normalize() {
  if (num_.is_zero()) {
    den_ = PolyZ(1);
    return;
  }
  if (den_.degree() == 0 && den_.coeff(0) == 1) return;  // already canonical
  PolyZ g = PolyZ::gcd(num_, den_);
  if (g.degree() > 0 || g.valuation() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  BigInt cn = num_.content(), cd = den_.content(), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divide_exact(PolyZ(c));
    den_ = den_.divide_exact(PolyZ(c));
  }
}

namespace {
const PolyZ kOne(1);
bool is_one_poly(const PolyZ& p) { return p.degree() == 0 && p.coeff(0) == 1; }
}  // namespace

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero() || b.is_zero()) return RatFuncQ();
  RatFuncQ r;
  if (is_one_poly(a.den_) && is_one_poly(b.den_)) {  // polynomial fast path
    r.num_ = a.num_ * b.num_;
    r.den_ = kOne;
    return r;
  }
  // Cross-reduce before multiplying to keep the degrees small.
  PolyZ g1 = is_one_poly(b.den_) ? kOne : PolyZ::gcd(a.num_, b.den_);
  PolyZ g2 = is_one_poly(a.den_) ? kOne : PolyZ::gcd(b.num_, a.den_);
  r.num_ = (is_one_poly(g1) ? a.num_ : a.num_.divide_exact(g1)) *
           (is_one_poly(g2) ? b.num_ : b.num_.divide_exact(g2));
  r.den_ = (is_one_poly(g2) ? a.den_ : a.den_.divide_exact(g2)) *
           (is_one_poly(g1) ? b.den_ : b.den_.divide_exact(g1));
  r.normalize();
  return r;
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFuncQ r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    if (r.num_.is_zero()) return RatFuncQ();
    if (is_one_poly(a.den_)) { r.den_ = kOne; return r; }
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    if (r.num_.is_zero()) return RatFuncQ();
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return r;
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) { return a * b.inverse(); }

std::string RatFuncQ::str() const {
  std::ostringstream os;
  if (den_ == PolyZ(1)) {
    os << num_.str();
  } else {
    bool pn = num_.degree() > 0 && !num_.is_monomial();
    bool pd = den_.degree() > 0 && !den_.is_monomial();
    os << (pn ? "(" : "") << num_.str() << (pn ? ")" : "") << "/"
       << (pd ? "(" : "") << den_.str() << (pd ? ")" : "");
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFuncQ& f) { return os << f.str(); }

}  // namespace yblab
