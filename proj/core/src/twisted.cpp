#include "yblab/qmat/twisted.hpp"

namespace yblab {

NCPoly bullet_product(const RewriteSystem& rs, const NCPoly& h, const NCPoly& hp) {
  return normal_form(h * hp, rs);
}

bool bullet_associativity_check(const RewriteSystem& rs) {
  std::vector<GenId> gens = rs.generators();
  for (const GenId& a : gens)
    for (const GenId& b : gens)
      for (const GenId& c : gens) {
        NCPoly ab = bullet_product(rs, NCPoly::gen(a), NCPoly::gen(b));
        NCPoly bc = bullet_product(rs, NCPoly::gen(b), NCPoly::gen(c));
        if (bullet_product(rs, ab, NCPoly::gen(c)) != bullet_product(rs, NCPoly::gen(a), bc))
          return false;
      }
  return true;
}

bool bullet_matches_psi(const RewriteSystem& rs, const Coquasi& cq, const TransArray& c) {
  int m = rs.m();
  for (int k = 1; k <= rs.legs(); ++k)
    for (int l = k + 1; l <= rs.legs(); ++l) {
      int eps = sign_from_color(c(k, l));
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          for (int ip = 1; ip <= m; ++ip)
            for (int jp = 1; jp <= m; ++jp) {
              GenId top{l, ip, jp}, bot{k, i, j};
              NCPoly lhs = bullet_product(rs, NCPoly::gen(top), NCPoly::gen(bot));
              // Psi output pairs: (descendant of x_{ij} at leg k, descendant
              // of x_{i'j'} at leg l)
              NCPoly rhs;
              for (const auto& [pr, coef] : cq.psi(eps, {{l, ip, jp}}, {{k, i, j}})) {
                NCWord w;
                for (GenId g : pr.first) { g.leg = k; w.push_back(g); }
                for (GenId g : pr.second) { g.leg = l; w.push_back(g); }
                rhs.add(std::move(w), coef);
              }
              if (normal_form(rhs, rs) != lhs) return false;
            }
    }
  return true;
}

namespace {
NCPoly map_to_single_leg(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCWord nw(w);
    for (GenId& g : nw) g.leg = 1;
    out.add(std::move(nw), c);
  }
  return out;
}

std::vector<NCWord> pbw_words_up_to(const RewriteSystem& rs, int degree) {
  std::vector<GenId> gens = rs.generators();
  std::vector<NCWord> out{NCWord{}};
  std::vector<NCWord> frontier{NCWord{}};
  for (int d = 1; d <= degree; ++d) {
    std::vector<NCWord> next;
    for (const NCWord& w : frontier)
      for (const GenId& g : gens) {
        if (!w.empty() && g < w.back()) continue;  // keep words ascending
        NCWord nw(w);
        nw.push_back(g);
        next.push_back(nw);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}
}  // namespace

bool qmat_mult_hom_check(const RewriteSystem& rs, int degree_bound) {
  RewriteSystem single(rs.m(), 1);
  std::vector<NCWord> words = pbw_words_up_to(rs, degree_bound);
  for (const NCWord& hw : words)
    for (const NCWord& hpw : words) {
      NCPoly h(hw), hp(hpw);
      NCPoly lhs = map_to_single_leg(bullet_product(rs, h, hp));
      lhs = normal_form(lhs, single);
      NCPoly rhs = normal_form(map_to_single_leg(h) * map_to_single_leg(hp), single);
      if (lhs != rhs) return false;
    }
  return true;
}

NCPoly nonisom_witness(int m, int i, int j) {
  if (m < 2 || !(i > j)) throw std::invalid_argument("nonisom_witness: need m >= 2 and i > j");
  Coquasi cq(m);
  int ip = j, jp = i;
  NCPoly out;
  for (int s = 1; s <= m; ++s)
    for (int sp = 1; sp <= m; ++sp) {
      RatFuncQ c1 = cq.gen_table(1, s, j, sp, jp);
      if (!c1.is_zero()) out.add({{1, i, s}, {2, ip, sp}}, c1);
      RatFuncQ c2 = cq.gen_table(1, i, s, ip, sp);
      if (!c2.is_zero()) out.add({{1, s, j}, {2, sp, jp}}, -c2);
    }
  return out;
}

bool perm_isom_flip_fails(int m) { return !nonisom_witness(m, m, 1).is_zero(); }

bool coquasi_rule_compatibility(const Coquasi& cq, int eps) {
  RewriteSystem rs(cq.m(), 1);
  std::vector<GenId> gens = rs.generators();
  for (const GenId& a : gens)
    for (const GenId& b : gens) {
      if (!(b < a)) continue;
      NCPoly L({a, b});
      NCPoly R = rs.rule(a, b);
      for (const GenId& g : gens) {
        NCPoly gp = NCPoly::gen(g);
        if (cq.eval_poly(eps, L, gp) != cq.eval_poly(eps, R, gp)) return false;
        if (cq.eval_poly(eps, gp, L) != cq.eval_poly(eps, gp, R)) return false;
      }
    }
  return true;
}

bool coquasi_braiding_check(const Coquasi& cq, int eps) {
  RewriteSystem rs(cq.m(), 1);
  std::vector<GenId> gens = rs.generators();
  for (const GenId& a : gens)
    for (const GenId& b : gens) {
      NCWord wa{a}, wb{b};
      NCPoly lhs, rhs;
      for (const auto& [a1, a2] : cq.splittings(wa))
        for (const auto& [b1, b2] : cq.splittings(wb)) {
          RatFuncQ cl = cq.eval(eps, a1, b1);
          if (!cl.is_zero()) {
            NCWord w(a2);
            w.insert(w.end(), b2.begin(), b2.end());
            lhs.add(std::move(w), cl);
          }
          RatFuncQ cr = cq.eval(eps, a2, b2);
          if (!cr.is_zero()) {
            NCWord w(b1);
            w.insert(w.end(), a1.begin(), a1.end());
            rhs.add(std::move(w), cr);
          }
        }
      if (normal_form(lhs, rs) != normal_form(rhs, rs)) return false;
    }
  return true;
}

bool coquasi_counital_check(const Coquasi& cq, int eps, int max_len) {
  RewriteSystem rs(cq.m(), 1);
  for (const NCWord& w : pbw_words_up_to(rs, max_len)) {
    if (cq.eval(eps, w, NCWord{}) != cq.counit(w)) return false;
    if (cq.eval(eps, NCWord{}, w) != cq.counit(w)) return false;
  }
  return true;
}

namespace {

// one convolution factor R^{(eps)} read at a pair of slots of A^{(x)2n}
struct JAtom {
  int slot_a;
  int slot_b;
  int eps;
};

using WordTuple = std::vector<NCWord>;

RatFuncQ chain_eval(const Coquasi& cq, const std::vector<JAtom>& atoms, std::size_t pos,
                    const WordTuple& ws) {
  if (pos == atoms.size()) {
    RatFuncQ v(1);
    for (const NCWord& w : ws) {
      v *= cq.counit(w);
      if (v.is_zero()) return v;
    }
    return v;
  }
  const JAtom& f = atoms[pos];
  const NCWord& wa = ws[static_cast<std::size_t>(f.slot_a - 1)];
  const NCWord& wb = ws[static_cast<std::size_t>(f.slot_b - 1)];
  RatFuncQ total;
  for (const auto& [ua, la] : cq.splittings(wa))
    for (const auto& [ub, lb] : cq.splittings(wb)) {
      RatFuncQ c = cq.eval(f.eps, ua, ub);
      if (c.is_zero()) continue;
      WordTuple rest(ws);
      rest[static_cast<std::size_t>(f.slot_a - 1)] = la;
      rest[static_cast<std::size_t>(f.slot_b - 1)] = lb;
      total += c * chain_eval(cq, atoms, pos + 1, rest);
    }
  return total;
}

std::vector<JAtom> jc_atoms(const TransArray& c) {
  int n = c.size();
  std::vector<JAtom> atoms;
  for (int i = 2; i <= n; ++i)
    for (int j = i - 1; j >= 1; --j)
      atoms.push_back({i, n + j, sign_from_color(c(j, i))});
  return atoms;
}

RatFuncQ jc_eval(const Coquasi& cq, const std::vector<JAtom>& atoms, const WordTuple& u,
                 const WordTuple& v) {
  WordTuple ws(u);
  ws.insert(ws.end(), v.begin(), v.end());
  return chain_eval(cq, atoms, 0, ws);
}

std::vector<std::pair<WordTuple, WordTuple>> tuple_splittings(const Coquasi& cq,
                                                              const WordTuple& w) {
  std::vector<std::pair<WordTuple, WordTuple>> out{{WordTuple{}, WordTuple{}}};
  for (const NCWord& slot : w) {
    std::vector<std::pair<WordTuple, WordTuple>> next;
    for (const auto& [up, lo] : cq.splittings(slot))
      for (const auto& [pu, pl] : out) {
        WordTuple nu(pu), nl(pl);
        nu.push_back(up);
        nl.push_back(lo);
        next.emplace_back(std::move(nu), std::move(nl));
      }
    out = std::move(next);
  }
  return out;
}

WordTuple tuple_concat(const WordTuple& a, const WordTuple& b) {
  WordTuple r(a);
  for (std::size_t t = 0; t < r.size(); ++t)
    r[t].insert(r[t].end(), b[t].begin(), b[t].end());
  return r;
}

std::vector<WordTuple> b_generators(int m, int n) {
  std::vector<WordTuple> gens;
  for (int leg = 1; leg <= n; ++leg)
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        WordTuple t(static_cast<std::size_t>(n));
        t[static_cast<std::size_t>(leg - 1)] = NCWord{{leg, i, j}};
        gens.push_back(std::move(t));
      }
  return gens;
}

}  // namespace

bool dual_twist_axiom_check(int m, const TransArray& c) {
  Coquasi cq(m);
  int n = c.size();
  std::vector<JAtom> atoms = jc_atoms(c);
  std::vector<WordTuple> gens = b_generators(m, n);
  WordTuple unit(static_cast<std::size_t>(n));

  // counital laws J(h_(1), 1) h_(2) = J(h_(2), 1) h_(1) and its mirror
  for (const WordTuple& h : gens) {
    std::map<WordTuple, RatFuncQ> lhs, rhs, lhs2, rhs2;
    for (const auto& [h1, h2] : tuple_splittings(cq, h)) {
      RatFuncQ a = jc_eval(cq, atoms, h1, unit);
      RatFuncQ b = jc_eval(cq, atoms, h2, unit);
      if (!a.is_zero()) lhs[h2] += a;
      if (!b.is_zero()) rhs[h1] += b;
      RatFuncQ a2 = jc_eval(cq, atoms, unit, h1);
      RatFuncQ b2 = jc_eval(cq, atoms, unit, h2);
      if (!a2.is_zero()) lhs2[h2] += a2;
      if (!b2.is_zero()) rhs2[h1] += b2;
    }
    auto strip = [](std::map<WordTuple, RatFuncQ>& mp) {
      for (auto it = mp.begin(); it != mp.end();)
        it = it->second.is_zero() ? mp.erase(it) : std::next(it);
    };
    strip(lhs); strip(rhs); strip(lhs2); strip(rhs2);
    if (lhs != rhs || lhs2 != rhs2) return false;
  }

  // (J o (m (x) id)) * J_{1,2} = (J o (id (x) m)) * J_{2,3} on generator triples
  for (const WordTuple& h : gens)
    for (const WordTuple& hp : gens)
      for (const WordTuple& hpp : gens) {
        RatFuncQ lhs, rhs;
        for (const auto& [h1, h2] : tuple_splittings(cq, h))
          for (const auto& [hp1, hp2] : tuple_splittings(cq, hp))
            lhs += jc_eval(cq, atoms, tuple_concat(h1, hp1), hpp) * jc_eval(cq, atoms, h2, hp2);
        for (const auto& [hp1, hp2] : tuple_splittings(cq, hp))
          for (const auto& [hpp1, hpp2] : tuple_splittings(cq, hpp))
            rhs += jc_eval(cq, atoms, h, tuple_concat(hp1, hpp1)) * jc_eval(cq, atoms, hp2, hpp2);
        if (lhs != rhs) return false;
      }
  return true;
}

bool relative_dual_twist_check(int m, int eps) {
  Coquasi cq(m);
  std::vector<GenId> gens;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) gens.push_back({1, i, j});
  for (const GenId& b : gens)
    for (const GenId& a : gens)
      for (const GenId& bp : gens)
        for (const GenId& ap : gens) {
          NCWord wb{b}, wa{a}, wbp{bp}, wap{ap};
          RatFuncQ lhs, rhs;
          for (const auto& [b1, b2] : cq.splittings(wb)) {
            NCWord bbp(b1);
            bbp.insert(bbp.end(), wbp.begin(), wbp.end());
            lhs += cq.eval(eps, bbp, wap) * cq.eval(eps, b2, wa);
          }
          for (const auto& [ap1, ap2] : cq.splittings(wap)) {
            NCWord aap(wa);
            aap.insert(aap.end(), ap1.begin(), ap1.end());
            rhs += cq.eval(eps, wb, aap) * cq.eval(eps, wbp, ap2);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

namespace {

std::map<std::pair<NCWord, NCWord>, RatFuncQ> expand_pairs(const Coquasi& cq,
                                                           const RewriteSystem& rs,
                                                           const NCPoly& p) {
  std::map<std::pair<NCWord, NCWord>, RatFuncQ> out;
  for (const auto& [w, c] : p.terms())
    for (const auto& [up, lo] : cq.splittings(w)) {
      NCPoly nu = normal_form(NCPoly(up), rs);
      NCPoly nl = normal_form(NCPoly(lo), rs);
      for (const auto& [wu, cu] : nu.terms())
        for (const auto& [wl, cl] : nl.terms()) {
          auto key = std::make_pair(wu, wl);
          auto it = out.find(key);
          RatFuncQ v = c * cu * cl;
          if (it == out.end()) out.emplace(key, v);
          else {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
          }
        }
    }
  return out;
}

}  // namespace

bool bullet_comultiplicativity_check(const RewriteSystem& rs) {
  Coquasi cq(rs.m());
  std::vector<GenId> gens = rs.generators();
  for (const GenId& a : gens)
    for (const GenId& b : gens) {
      NCPoly prod = bullet_product(rs, NCPoly::gen(a), NCPoly::gen(b));
      auto lhs = expand_pairs(cq, rs, prod);

      std::map<std::pair<NCWord, NCWord>, RatFuncQ> rhs;
      for (const auto& [a1, a2] : cq.splittings(NCWord{a}))
        for (const auto& [b1, b2] : cq.splittings(NCWord{b})) {
          NCPoly up = bullet_product(rs, NCPoly(a1), NCPoly(b1));
          NCPoly lo = bullet_product(rs, NCPoly(a2), NCPoly(b2));
          for (const auto& [wu, cu] : up.terms())
            for (const auto& [wl, cl] : lo.terms()) {
              auto key = std::make_pair(wu, wl);
              auto it = rhs.find(key);
              RatFuncQ v = cu * cl;
              if (it == rhs.end()) rhs.emplace(key, v);
              else {
                it->second += v;
                if (it->second.is_zero()) rhs.erase(it);
              }
            }
        }
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

CPoly nc_to_cpoly_at_q1(const NCPoly& p, const RatFuncQ& scale) {
  CPoly out;
  for (const auto& [w, c] : p.terms()) {
    Rational coef = (c * scale).evaluate(Rational(1));
    PMonomial mono;
    for (const GenId& g : w) mono[PGen{PKind::X, g.leg, g.i, g.j}] += 1;
    out.add(std::move(mono), coef);
  }
  return out;
}

}  // namespace

bool semiclassical_check_single(int m) {
  RewriteSystem rs(m, 1);
  BracketTable table = build_bracket_Amn(1, m, TransArray(1));
  RatFuncQ q = RatFuncQ::q();
  RatFuncQ scale = RatFuncQ(2) / (q - q.inverse());
  std::vector<GenId> gens = rs.generators();
  for (const GenId& a : gens)
    for (const GenId& b : gens) {
      NCPoly com = normal_form(NCPoly::gen(a) * NCPoly::gen(b) - NCPoly::gen(b) * NCPoly::gen(a), rs);
      CPoly lhs = nc_to_cpoly_at_q1(com, scale);
      CPoly rhs = table.at(PGen{PKind::X, 1, a.i, a.j}, PGen{PKind::X, 1, b.i, b.j});
      if (lhs != rhs) return false;
    }
  return true;
}

bool semiclassical_check_twisted_n2(int m) {
  // The classical table of c carries -tau(r^{(c)}) on the mirrored positions
  // while the twisted product uses the dual twist of c directly, so the
  // commutator limit of the sign array c lands on the table of the reversed
  // array: pair sigma_{(2,1)} quantum relations with the sigma_id table.
  TransArray c = sigma_of_perm(Permutation({2, 1}));
  RewriteSystem rs(m, c);
  BracketTable table = build_bracket_Amn(2, m, sigma_of_perm(Permutation::identity(2)));
  RatFuncQ q = RatFuncQ::q();
  RatFuncQ scale = RatFuncQ(2) / (q - q.inverse());
  std::vector<GenId> gens = rs.generators();
  for (const GenId& a : gens)
    for (const GenId& b : gens) {
      NCPoly com = bullet_product(rs, NCPoly::gen(a), NCPoly::gen(b)) -
                   bullet_product(rs, NCPoly::gen(b), NCPoly::gen(a));
      CPoly lhs = nc_to_cpoly_at_q1(com, scale);
      CPoly rhs = table.at(PGen{PKind::X, a.leg, a.i, a.j}, PGen{PKind::X, b.leg, b.i, b.j});
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace yblab
