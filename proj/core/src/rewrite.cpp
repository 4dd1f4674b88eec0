#include "yblab/qmat/rewrite.hpp"

#include <stdexcept>

namespace yblab {

RewriteSystem::RewriteSystem(int m, int legs) : m_(m), legs_(legs) {
  if (m < 1 || legs < 1) throw std::invalid_argument("RewriteSystem: m, legs >= 1");
  if (legs > 1) throw std::invalid_argument("RewriteSystem: multi-leg system needs a sign array");
}

RewriteSystem::RewriteSystem(int m, const TransArray& c) : m_(m), legs_(c.size()), c_(c) {
  if (m < 1) throw std::invalid_argument("RewriteSystem: m >= 1");
}

int RewriteSystem::sign_between(int k, int l) const {
  if (!c_) throw std::logic_error("RewriteSystem: no sign array");
  return sign_from_color((*c_)(k, l));
}

std::vector<GenId> RewriteSystem::generators() const {
  std::vector<GenId> g;
  for (int k = 1; k <= legs_; ++k)
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= m_; ++j) g.push_back({k, i, j});
  return g;
}

NCPoly RewriteSystem::rule(const GenId& g2, const GenId& g1) const {
  if (!(g1 < g2)) throw std::invalid_argument("RewriteSystem::rule: pair must descend");
  RatFuncQ q = RatFuncQ::q();
  NCPoly out;
  if (g2.leg == g1.leg) {
    // q^{d_{ii'}} x_{i'j'} x_{ij} - q^{d_{jj'}} x_{ij} x_{i'j'}
    //   = (q - q^{-1}) (Y(j-j') - Y(i'-i)) x_{ij'} x_{i'j}
    int k = g1.leg;
    int i = g1.i, j = g1.j, ip = g2.i, jp = g2.j;
    RatFuncQ qd = RatFuncQ::q_pow((j == jp ? 1 : 0) - (i == ip ? 1 : 0));
    out.add({{k, i, j}, {k, ip, jp}}, qd);
    long ups = upsilon(j - jp) - upsilon(ip - i);
    if (ups != 0) {
      RatFuncQ coef = RatFuncQ::q_pow(-(i == ip ? 1 : 0)) * (q - q.inverse()) * RatFuncQ(ups);
      out.add({{k, i, jp}, {k, ip, j}}, coef);
    }
    return out;
  }
  // cross-leg: g2 on leg l > g1 on leg k; braiding by Psi^{(eps)}
  int k = g1.leg, l = g2.leg;
  int i = g1.i, j = g1.j, ip = g2.i, jp = g2.j;
  int eps = sign_between(k, l);
  RatFuncQ qe = RatFuncQ::q_pow(eps);
  RatFuncQ qeminus = qe - qe.inverse();
  int dii = i == ip ? 1 : 0, djj = j == jp ? 1 : 0;

  out.add({{k, i, j}, {l, ip, jp}}, RatFuncQ::q_pow(eps * (djj - dii)));
  if (upsilon(eps * (ip - i)))
    out.add({{k, ip, j}, {l, i, jp}}, -(RatFuncQ::q_pow(eps * djj) * qeminus));
  if (upsilon(eps * (j - jp)))
    out.add({{k, i, jp}, {l, ip, j}}, RatFuncQ::q_pow(-eps * dii) * qeminus);
  if (upsilon(eps * (ip - i)) && upsilon(eps * (j - jp))) {
    RatFuncQ qm = q - q.inverse();
    out.add({{k, ip, jp}, {l, i, j}}, -(qm * qm));
  }
  return out;
}

NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs, std::size_t max_steps) {
  NCPoly out;
  std::vector<std::pair<NCWord, RatFuncQ>> stack(p.terms().begin(), p.terms().end());
  std::size_t steps = 0;
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    if (++steps > max_steps)
      throw std::logic_error("normal_form: step bound exceeded (non-terminating rule set?)");
    std::size_t pos = w.size();
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t + 1] < w[t]) { pos = t; break; }
    if (pos == w.size()) {
      out.add(std::move(w), std::move(c));
      continue;
    }
    NCPoly rep = rs.rule(w[pos], w[pos + 1]);
    for (const auto& [rw, rc] : rep.terms()) {
      NCWord nw;
      nw.reserve(w.size());
      nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      stack.emplace_back(std::move(nw), c * rc);
    }
  }
  return out;
}

bool confluence_check(const RewriteSystem& rs) {
  std::vector<GenId> gens = rs.generators();
  for (const GenId& a : gens)
    for (const GenId& b : gens) {
      if (!(b < a)) continue;
      for (const GenId& c : gens) {
        if (!(c < b)) continue;
        // reduce a b c starting from the left pair and from the right pair
        NCPoly left = rs.rule(a, b) * NCPoly::gen(c);
        NCPoly right = NCPoly::gen(a) * rs.rule(b, c);
        if (normal_form(left, rs) != normal_form(right, rs)) return false;
      }
    }
  return true;
}

}  // namespace yblab
