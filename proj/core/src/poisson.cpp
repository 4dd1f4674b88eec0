#include "yblab/poisson/bracket.hpp"

#include <sstream>

namespace yblab {

const CPoly ActionTable::kZero{};
const CPoly BracketTable::kZero{};

const CPoly& ActionTable::right_of(int basis, const PGen& g) const {
  auto it = right.find({basis, g});
  return it == right.end() ? kZero : it->second;
}
const CPoly& ActionTable::left_of(int basis, const PGen& g) const {
  auto it = left.find({basis, g});
  return it == left.end() ? kZero : it->second;
}

std::vector<std::pair<CPoly, CPoly>> bowtie_components(const LieTensor& r, const ActionTable& act,
                                                       const PGen& f, const PGen& fp) {
  if (r.arity() != 2) throw std::invalid_argument("bowtie_components: arity-2 tensor required");
  std::vector<std::pair<CPoly, CPoly>> out;
  for (const auto& [k, v] : r.terms()) {
    const CPoly& fr = act.right_of(k[0], f);
    const CPoly& fpr = act.right_of(k[1], fp);
    if (!fr.is_zero() && !fpr.is_zero()) out.emplace_back(fr.scaled(v), fpr);
    const CPoly& fl = act.left_of(k[0], f);
    const CPoly& fpl = act.left_of(k[1], fp);
    if (!fl.is_zero() && !fpl.is_zero()) out.emplace_back(fl.scaled(-v), fpl);
  }
  return out;
}

CPoly poisson_bowtie(const LieTensor& r, const ActionTable& act, const PGen& f, const PGen& fp) {
  if (r.arity() != 2) throw std::invalid_argument("poisson_bowtie: arity-2 tensor required");
  CPoly out;
  for (const auto& [k, v] : r.terms()) {
    const CPoly& fr = act.right_of(k[0], f);
    const CPoly& fpr = act.right_of(k[1], fp);
    if (!fr.is_zero() && !fpr.is_zero()) out = out + (fr * fpr).scaled(v);
    const CPoly& fl = act.left_of(k[0], f);
    const CPoly& fpl = act.left_of(k[1], fp);
    if (!fl.is_zero() && !fpl.is_zero()) out = out - (fl * fpl).scaled(v);
  }
  return out;
}

void BracketTable::set(const PGen& a, const PGen& b, CPoly v) {
  if (b < a) {
    set(b, a, -v);
    return;
  }
  if (a == b) {
    if (!v.is_zero()) throw std::invalid_argument("BracketTable: {g,g} must vanish");
    return;
  }
  e_[{a, b}] = std::move(v);
}

const CPoly& BracketTable::at(const PGen& a, const PGen& b) const {
  if (a == b) return kZero;
  auto it = e_.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  if (it == e_.end()) return kZero;
  if (a < b) return it->second;
  static thread_local CPoly neg;
  neg = -it->second;
  return neg;
}

CPoly BracketTable::bracket(const CPoly& f, const CPoly& g) const {
  // biderivation: {M, N} = sum_{a in M, b in N} e_a e_b (M/a)(N/b) {a, b}
  CPoly out;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) {
      Rational c = cf * cg;
      for (const auto& [ga, ea] : mf)
        for (const auto& [gb, eb] : mg) {
          const CPoly& br = at(ga, gb);
          if (br.is_zero()) continue;
          PMonomial rest(mf);
          if (--rest[ga] == 0) rest.erase(ga);
          for (const auto& [g2, e2] : mg) rest[g2] += e2;
          if (--rest[gb] == 0) rest.erase(gb);
          CPoly restp;
          restp.add(std::move(rest), c * Rational(ea) * Rational(eb));
          out = out + restp * br;
        }
    }
  return out;
}

ActionTable glm_action_table(int m, int n) {
  ActionTable act;
  int d = m * m;
  for (int copy = 0; copy < n; ++copy)
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b) {
        int basis = copy * d + gl_index(m, a, b);
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= m; ++j) {
            PGen x{PKind::X, copy + 1, i, j};
            // x_{ij} <| E_ab = d_{ai} x_{bj};  E_ab |> x_{ij} = d_{bj} x_{ia}
            if (a == i) act.right[{basis, x}] = CPoly::gen({PKind::X, copy + 1, b, j});
            if (b == j) act.left[{basis, x}] = CPoly::gen({PKind::X, copy + 1, i, a});
          }
      }
  return act;
}

ActionTable takiff_action_table(int m, int n) {
  ActionTable act;
  int d = m * m;       // dim gl_m
  int td = 2 * d;      // dim takiff
  for (int copy = 0; copy < n; ++copy) {
    int leg = copy + 1;
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b) {
        int vbasis = copy * td + gl_index(m, a, b);      // F_{ab} = f(E_{ab})
        int xbasis = copy * td + d + gl_index(m, a, b);  // E_{ab}
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= m; ++j) {
            PGen x{PKind::X, leg, i, j};
            PGen xb{PKind::XBar, leg, i, j};
            PGen y{PKind::Y, leg, i, j};
            // g-part on matrix entries
            if (a == i) act.right[{xbasis, x}] = CPoly::gen({PKind::X, leg, b, j});
            if (b == j) act.left[{xbasis, x}] = CPoly::gen({PKind::X, leg, i, a});
            // inverse entries: xbar_{ij} <| E_ab = -d_{bj} xbar_{ia},
            //                  E_ab |> xbar_{ij} = -d_{ai} xbar_{bj}
            if (b == j) act.right[{xbasis, xb}] = -CPoly::gen({PKind::XBar, leg, i, a});
            if (a == i) act.left[{xbasis, xb}] = -CPoly::gen({PKind::XBar, leg, b, j});
            // y <| E_ab = d_{ia} y_{bj} - d_{bj} y_{ia};  E_ab |> y = 0
            {
              CPoly v;
              if (i == a) v = v + CPoly::gen({PKind::Y, leg, b, j});
              if (b == j) v = v - CPoly::gen({PKind::Y, leg, i, a});
              if (!v.is_zero()) act.right[{xbasis, y}] = v;
            }
            // y <| F_ab = d_{ia} d_{jb};  F_ab |> y = x_{ia} xbar_{bj}
            if (i == a && j == b) act.right[{vbasis, y}] = CPoly::one();
            act.left[{vbasis, y}] =
                CPoly::gen({PKind::X, leg, i, a}) * CPoly::gen({PKind::XBar, leg, b, j});
          }
      }
  }
  return act;
}

namespace {
int isign(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
}  // namespace

BracketTable build_bracket_Amn(int n, int m, const TransArray& c) {
  if (c.size() != n) throw std::invalid_argument("build_bracket_Amn: |c| != n");
  BracketTable table;
  auto gen = [](int leg, int i, int j) { return PGen{PKind::X, leg, i, j}; };
  for (int k = 1; k <= n; ++k)
    for (int kp = k; kp <= n; ++kp)
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          for (int ip = 1; ip <= m; ++ip)
            for (int jp = 1; jp <= m; ++jp) {
              if (k == kp) {
                PGen a = gen(k, i, j), b = gen(k, ip, jp);
                if (!(a < b)) continue;
                // {x_{ij}, x_{i'j'}} = (sign(i'-i)+sign(j'-j)) x_{ij'} x_{i'j}
                int s = isign(ip - i) + isign(jp - j);
                CPoly v;
                if (s != 0)
                  v = (CPoly::gen(gen(k, i, jp)) * CPoly::gen(gen(k, ip, j))).scaled(Rational(s));
                table.set(a, b, std::move(v));
              } else {
                int eps = sign_from_color(c(k, kp));
                // {x^{(k)}_{ij}, x^{(k')}_{i'j'}}_c =
                //   (sign(j'-j)+eps) x^{(k)}_{ij'} x^{(k')}_{i'j}
                // + (sign(i'-i)-eps) x^{(k)}_{i'j} x^{(k')}_{ij'}
                CPoly v;
                int s1 = isign(jp - j) + eps, s2 = isign(ip - i) - eps;
                if (s1 != 0)
                  v = v + (CPoly::gen(gen(k, i, jp)) * CPoly::gen(gen(kp, ip, j))).scaled(Rational(s1));
                if (s2 != 0)
                  v = v + (CPoly::gen(gen(k, ip, j)) * CPoly::gen(gen(kp, i, jp))).scaled(Rational(s2));
                table.set(gen(k, i, j), gen(kp, ip, jp), std::move(v));
              }
            }
  return table;
}

BracketTable build_takiff_tables(int m, int n, const TransArray& c,
                                 const std::vector<Rational>& lambdas) {
  if (c.size() != n) throw std::invalid_argument("build_takiff_tables: |c| != n");
  auto g = gl(m);
  auto t = takiff(g);
  LieTensor rhat = takiff_hat(t, skew_glm_r(m));
  LieTensor omega = takiff_omega(t, glm_casimir(m));
  ActionTable act = takiff_action_table(m, n);
  int td = t->dim();

  // every generator of every leg
  std::vector<PGen> gens;
  for (int leg = 1; leg <= n; ++leg)
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        gens.push_back({PKind::Y, leg, i, j});
        gens.push_back({PKind::X, leg, i, j});
        gens.push_back({PKind::XBar, leg, i, j});
      }

  BracketTable table;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const PGen& f = gens[a];
      const PGen& fp = gens[b];
      int k = f.leg, l = fp.leg;
      CPoly v;
      if (k == l) {
        // single-leg: mu(rhat |><| (f (x) f')), indices shifted into the leg block
        CPoly acc;
        for (const auto& [key, coef] : rhat.terms()) {
          int b1 = (k - 1) * td + key[0];
          int b2 = (k - 1) * td + key[1];
          const CPoly& fr = act.right_of(b1, f);
          const CPoly& fpr = act.right_of(b2, fp);
          if (!fr.is_zero() && !fpr.is_zero()) acc = acc + (fr * fpr).scaled(coef);
          const CPoly& fl = act.left_of(b1, f);
          const CPoly& fpl = act.left_of(b2, fp);
          if (!fl.is_zero() && !fpl.is_zero()) acc = acc - (fl * fpl).scaled(coef);
        }
        v = std::move(acc);
      } else {
        // cross-leg (k < l by generator order): {f^{(k)}, f'^{(l)}}_c =
        //   -mu( r^{(c(k,l))} |><| (f' (x) f) ) with slot 1 acting on leg l
        Rational lam = lambdas.at(static_cast<std::size_t>(c(k, l)));
        LieTensor rc = rhat + omega.scaled(lam);
        CPoly acc;
        for (const auto& [key, coef] : rc.terms()) {
          int b1 = (l - 1) * td + key[0];
          int b2 = (k - 1) * td + key[1];
          const CPoly& fpr = act.right_of(b1, fp);
          const CPoly& fr = act.right_of(b2, f);
          if (!fpr.is_zero() && !fr.is_zero()) acc = acc + (fpr * fr).scaled(coef);
          const CPoly& fpl = act.left_of(b1, fp);
          const CPoly& fl = act.left_of(b2, f);
          if (!fpl.is_zero() && !fl.is_zero()) acc = acc - (fpl * fl).scaled(coef);
        }
        v = -acc;
      }
      table.set(f, fp, std::move(v));
    }
  return table;
}

bool jacobi_check(const BracketTable& table, const std::vector<PGen>& gens) {
  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = x + 1; y < gens.size(); ++y)
      for (std::size_t z = y + 1; z < gens.size(); ++z) {
        CPoly a = CPoly::gen(gens[x]), b = CPoly::gen(gens[y]), c = CPoly::gen(gens[z]);
        CPoly s = table.bracket(table.bracket(a, b), c) + table.bracket(table.bracket(b, c), a) +
                  table.bracket(table.bracket(c, a), b);
        if (!s.is_zero()) return false;
      }
  return true;
}

bool poisson_mult_hom_check(const BracketTable& table, const BracketTable& single,
                            const std::vector<PGen>& gens) {
  for (const PGen& f : gens)
    for (const PGen& g : gens) {
      CPoly lhs = table.at(f, g).collapse_legs(1);
      PGen f1 = f, g1 = g;
      f1.leg = 1;
      g1.leg = 1;
      if (lhs != single.at(f1, g1)) return false;
    }
  return true;
}

bool det_central_check(const BracketTable& single_leg_m2) {
  auto x = [](int i, int j) { return CPoly::gen({PKind::X, 1, i, j}); };
  CPoly det = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      if (!single_leg_m2.bracket(det, x(i, j)).is_zero()) return false;
  return true;
}

namespace {

// invertible rational matrix per leg plus its exact inverse
void sample_point(Rng& rng, int m, int n, long bound, std::map<PGen, Rational>& point) {
  point.clear();
  for (int leg = 1; leg <= n; ++leg) {
    // sample until det != 0
    std::vector<std::vector<Rational>> X;
    Rational det;
    for (;;) {
      X.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m)));
      for (auto& row : X)
        for (auto& v : row) v = Rational(rng.integer(bound), 1 + static_cast<long>(rng.below(4)));
      if (m == 1) det = X[0][0];
      else if (m == 2) det = X[0][0] * X[1][1] - X[0][1] * X[1][0];
      else
        throw std::invalid_argument("numeric_point_check: m <= 2 supported");
      if (!det.is_zero()) break;
    }
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        point[{PKind::X, leg, i, j}] = X[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        point[{PKind::Y, leg, i, j}] = rng.rational(bound);
      }
    if (m == 1) {
      point[{PKind::XBar, leg, 1, 1}] = X[0][0].inverse();
    } else {
      Rational dinv = det.inverse();
      point[{PKind::XBar, leg, 1, 1}] = X[1][1] * dinv;
      point[{PKind::XBar, leg, 1, 2}] = -X[0][1] * dinv;
      point[{PKind::XBar, leg, 2, 1}] = -X[1][0] * dinv;
      point[{PKind::XBar, leg, 2, 2}] = X[0][0] * dinv;
    }
  }
}

}  // namespace

PointCheckResult numeric_point_check(const BracketTable& table, PointIdentity which,
                                     const std::vector<PGen>& gens, const PointCheckConfig& cfg,
                                     const BracketTable* single_for_hom) {
  PointCheckResult res;
  res.trials = cfg.trials;
  res.coord_bound = cfg.coord_bound;
  res.seed = cfg.seed;
  // table entries have total degree <= 4; double brackets <= 7, plus the
  // inverse substitution multiplies degrees by at most m
  res.degree_bound = which == PointIdentity::jacobi ? 16 : 10;
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    std::map<PGen, Rational> point;
    sample_point(rng, cfg.m, cfg.n, cfg.coord_bound, point);
    switch (which) {
      case PointIdentity::skew: {
        for (const PGen& a : gens)
          for (const PGen& b : gens) {
            Rational lhs = table.at(a, b).evaluate(point);
            Rational rhs = (-table.at(b, a)).evaluate(point);
            if (lhs != rhs) { res.note = "skew failure"; return res; }
          }
        break;
      }
      case PointIdentity::jacobi: {
        for (std::size_t x = 0; x < gens.size(); ++x)
          for (std::size_t y = x + 1; y < gens.size(); ++y)
            for (std::size_t z = y + 1; z < gens.size(); ++z) {
              CPoly a = CPoly::gen(gens[x]), b = CPoly::gen(gens[y]), c = CPoly::gen(gens[z]);
              CPoly s = table.bracket(table.bracket(a, b), c) +
                        table.bracket(table.bracket(b, c), a) +
                        table.bracket(table.bracket(c, a), b);
              if (!s.evaluate(point).is_zero()) {
                res.note = "jacobi failure at (" + pgen_str(gens[x]) + "," + pgen_str(gens[y]) +
                           "," + pgen_str(gens[z]) + ")";
                return res;
              }
            }
        break;
      }
      case PointIdentity::hom: {
        if (!single_for_hom) throw std::invalid_argument("numeric_point_check: missing single table");
        for (const PGen& f : gens)
          for (const PGen& g : gens) {
            CPoly lhs = table.at(f, g).collapse_legs(1);
            PGen f1 = f, g1 = g;
            f1.leg = 1;
            g1.leg = 1;
            CPoly rhs = single_for_hom->at(f1, g1);
            if ((lhs - rhs).evaluate(point) != Rational()) { res.note = "hom failure"; return res; }
          }
        break;
      }
    }
  }
  res.passed = true;
  return res;
}

}  // namespace yblab
