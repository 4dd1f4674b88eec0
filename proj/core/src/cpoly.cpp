#include "yblab/poisson/cpoly.hpp"

#include <sstream>

namespace yblab {

std::string pgen_str(const PGen& g) {
  std::ostringstream os;
  switch (g.kind) {
    case PKind::X: os << "x"; break;
    case PKind::XBar: os << "xb"; break;
    case PKind::Y: os << "y"; break;
  }
  os << "[" << g.leg << ";" << g.i << "," << g.j << "]";
  return os.str();
}

void CPoly::add(PMonomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) t_.emplace(std::move(m), c);
  else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

CPoly CPoly::operator-() const { return scaled(Rational(-1)); }

CPoly CPoly::scaled(const Rational& c) const {
  CPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
  return r;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  CPoly r(a);
  for (const auto& [m, v] : b.t_) r.add(m, v);
  return r;
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + (-b); }

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly r;
  for (const auto& [ma, va] : a.t_)
    for (const auto& [mb, vb] : b.t_) {
      PMonomial m(ma);
      for (const auto& [g, e] : mb) m[g] += e;
      r.add(std::move(m), va * vb);
    }
  return r;
}

CPoly CPoly::collapse_legs(int to_leg) const {
  CPoly r;
  for (const auto& [m, v] : t_) {
    PMonomial nm;
    for (const auto& [g, e] : m) {
      PGen ng = g;
      ng.leg = to_leg;
      nm[ng] += e;
    }
    r.add(std::move(nm), v);
  }
  return r;
}

Rational CPoly::evaluate(const std::map<PGen, Rational>& point) const {
  Rational acc;
  for (const auto& [m, v] : t_) {
    Rational term = v;
    for (const auto& [g, e] : m) {
      auto it = point.find(g);
      if (it == point.end()) throw std::invalid_argument("CPoly::evaluate: unbound generator " + pgen_str(g));
      for (int t = 0; t < e; ++t) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

std::string CPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v << ")";
    for (const auto& [g, e] : m) {
      os << "*" << pgen_str(g);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace yblab
