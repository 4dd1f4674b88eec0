#include "yblab/qmat/coquasi.hpp"

#include "yblab/qmat/rewrite.hpp"

namespace yblab {

Coquasi::Coquasi(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("Coquasi: m >= 1");
}

RatFuncQ Coquasi::gen_table(int eps, int k, int l, int kp, int lp) const {
  // R^{(eps)}(x_{kl}, x_{k'l'}) =
  //   q_eps^{d_{kk'}} d_{kl} d_{k'l'} + (q_eps - q_eps^{-1}) Y(eps (k-k')) d_{kl'} d_{k'l}
  RatFuncQ v;
  if (k == l && kp == lp) v += RatFuncQ::q_pow(k == kp ? eps : 0);
  if (k == lp && kp == l && upsilon(eps * (k - kp))) {
    RatFuncQ qe = RatFuncQ::q_pow(eps);
    v += qe - qe.inverse();
  }
  return v;
}

RatFuncQ Coquasi::counit(const NCWord& w) const {
  for (const GenId& g : w)
    if (g.i != g.j) return RatFuncQ();
  return RatFuncQ(1);
}

RatFuncQ Coquasi::counit_poly(const NCPoly& p) const {
  RatFuncQ v;
  for (const auto& [w, c] : p.terms()) v += c * counit(w);
  return v;
}

std::vector<std::pair<NCWord, NCWord>> Coquasi::splittings(const NCWord& w) const {
  std::vector<std::pair<NCWord, NCWord>> out;
  std::size_t r = w.size();
  std::vector<int> mid(r, 1);
  for (;;) {
    NCWord up(w), lo(w);
    for (std::size_t t = 0; t < r; ++t) {
      up[t].j = mid[t];
      lo[t].i = mid[t];
    }
    out.emplace_back(std::move(up), std::move(lo));
    std::size_t t = 0;
    while (t < r && mid[t] == m_) mid[t++] = 1;
    if (t == r) break;
    ++mid[t];
  }
  return out;
}

RatFuncQ Coquasi::eval(int eps, const NCWord& a, const NCWord& b) const {
  if (a.empty()) return counit(b);
  if (b.empty()) return counit(a);
  if (a.size() == 1 && b.size() == 1)
    return gen_table(eps, a[0].i, a[0].j, b[0].i, b[0].j);

  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(std::make_tuple(eps, a, b));
    if (it != memo_.end()) return it->second;
  }

  RatFuncQ v;
  if (a.size() > 1) {
    // R(g a', b) = R(g, b_(1)) R(a', b_(2))
    NCWord g{a[0]};
    NCWord ap(a.begin() + 1, a.end());
    for (const auto& [up, lo] : splittings(b)) v += eval(eps, g, up) * eval(eps, ap, lo);
  } else {
    // R(g, h b') = R(g_(1), b') R(g_(2), h)
    NCWord h{b[0]};
    NCWord bp(b.begin() + 1, b.end());
    for (int s = 1; s <= m_; ++s) {
      NCWord g1{{a[0].leg, a[0].i, s}};
      NCWord g2{{a[0].leg, s, a[0].j}};
      v += eval(eps, g1, bp) * eval(eps, g2, h);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::make_tuple(eps, a, b), v);
  return v;
}

RatFuncQ Coquasi::eval_poly(int eps, const NCPoly& a, const NCPoly& b) const {
  RatFuncQ v;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) v += ca * cb * eval(eps, wa, wb);
  return v;
}

RatFuncQ Coquasi::conv_with_inverse(int eps, const NCWord& a, const NCWord& b) const {
  RatFuncQ v;
  for (const auto& [a1, a2] : splittings(a))
    for (const auto& [b1, b2] : splittings(b))
      v += eval(eps, a1, b1) * eval_inv(eps, a2, b2);
  return v;
}

std::map<std::pair<NCWord, NCWord>, RatFuncQ> Coquasi::psi(int eps, const NCWord& h,
                                                           const NCWord& hp) const {
  // triple Sweedler components of each word, outer parts paired through the
  // form, middles returned as (h'-part, h-part)
  std::map<std::pair<NCWord, NCWord>, RatFuncQ> out;
  for (const auto& [h1, h23] : splittings(h))
    for (const auto& [h2, h3] : splittings(h23))
      for (const auto& [hp1, hp23] : splittings(hp))
        for (const auto& [hp2, hp3] : splittings(hp23)) {
          RatFuncQ c = eval_inv(eps, h1, hp1) * eval(eps, h3, hp3);
          if (c.is_zero()) continue;
          auto key = std::make_pair(hp2, h2);
          auto it = out.find(key);
          if (it == out.end()) out.emplace(key, c);
          else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
          }
        }
  return out;
}

}  // namespace yblab
