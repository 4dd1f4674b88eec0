#include "yblab/qmat/ncpoly.hpp"

#include <sstream>

namespace yblab {

std::string gen_str(const GenId& g) {
  std::ostringstream os;
  os << "x[" << g.leg << ";" << g.i << "," << g.j << "]";
  return os.str();
}

std::string word_str(const NCWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t t = 0; t < w.size(); ++t) os << (t ? "*" : "") << gen_str(w[t]);
  return os.str();
}

void NCPoly::add(NCWord w, RatFuncQ c) {
  if (c.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) t_.emplace(std::move(w), std::move(c));
  else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

NCPoly NCPoly::operator-() const { return scaled(RatFuncQ(-1)); }

NCPoly NCPoly::scaled(const RatFuncQ& c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : t_) r.t_.emplace(w, v * c);
  return r;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  NCPoly r(a);
  for (const auto& [w, v] : b.t_) r.add(w, v);
  return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, va] : a.t_)
    for (const auto& [wb, vb] : b.t_) {
      NCWord w(wa);
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(std::move(w), va * vb);
    }
  return r;
}

std::string NCPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!w.empty()) os << "*" << word_str(w);
  }
  return os.str();
}

}  // namespace yblab
