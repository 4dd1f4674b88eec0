#include "yblab/lie/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace yblab {

const LieVec LieAlgebra::kEmpty{};

namespace {
void vec_acc(LieVec& v, int k, const Rational& c) {
  if (c.is_zero()) return;
  auto it = v.find(k);
  if (it == v.end()) v.emplace(k, c);
  else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}
}  // namespace

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels,
                       std::map<std::pair<int, int>, LieVec> brackets, std::string name)
    : dim_(dim), labels_(std::move(labels)), br_(std::move(brackets)), name_(std::move(name)) {
  if (static_cast<int>(labels_.size()) != dim_)
    throw std::invalid_argument("LieAlgebra: label count mismatch");
  for (auto& [key, v] : br_)
    for (auto it = v.begin(); it != v.end();)
      it = it->second.is_zero() ? v.erase(it) : std::next(it);
  verify();
}

const LieVec& LieAlgebra::bracket(int a, int b) const {
  auto it = br_.find({a, b});
  return it == br_.end() ? kEmpty : it->second;
}

LieVec LieAlgebra::bracket(const LieVec& x, const LieVec& y) const {
  LieVec r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [k, c] : bracket(a, b)) vec_acc(r, k, ca * cb * c);
  return r;
}

void LieAlgebra::verify() const {
  // antisymmetry
  for (int a = 0; a < dim_; ++a) {
    if (!bracket(a, a).empty()) throw std::invalid_argument("LieAlgebra: [x,x] != 0");
    for (int b = a + 1; b < dim_; ++b) {
      LieVec s = bracket(a, b);
      for (const auto& [k, c] : bracket(b, a)) vec_acc(s, k, c);
      if (!s.empty()) throw std::invalid_argument("LieAlgebra: antisymmetry fails");
    }
  }
  // Jacobi: [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b)
      for (int c = b + 1; c < dim_; ++c) {
        LieVec s;
        LieVec ec{{c, Rational(1)}}, ea{{a, Rational(1)}}, eb{{b, Rational(1)}};
        for (const auto& [k, v] : bracket(bracket(a, b), ec)) vec_acc(s, k, v);
        for (const auto& [k, v] : bracket(bracket(b, c), ea)) vec_acc(s, k, v);
        for (const auto& [k, v] : bracket(bracket(c, a), eb)) vec_acc(s, k, v);
        if (!s.empty()) throw std::invalid_argument("LieAlgebra: Jacobi identity fails");
      }
}

int gl_index(int m, int a, int b) { return (a - 1) * m + (b - 1); }

LieAlgebra::Ptr gl(int m) {
  if (m < 1) throw std::invalid_argument("gl: m >= 1");
  int d = m * m;
  std::vector<std::string> labels;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) labels.push_back("E" + std::to_string(a) + std::to_string(b));
  std::map<std::pair<int, int>, LieVec> br;
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c)
        for (int dd = 1; dd <= m; ++dd) {
          LieVec v;
          if (b == c) vec_acc(v, gl_index(m, a, dd), Rational(1));
          if (dd == a) vec_acc(v, gl_index(m, c, b), Rational(-1));
          if (!v.empty()) br[{gl_index(m, a, b), gl_index(m, c, dd)}] = std::move(v);
        }
  return std::make_shared<LieAlgebra>(d, std::move(labels), std::move(br),
                                      "gl" + std::to_string(m));
}

LieAlgebra::Ptr direct_sum(const LieAlgebra::Ptr& g, int n) {
  if (n < 1) throw std::invalid_argument("direct_sum: n >= 1");
  int d = g->dim();
  std::vector<std::string> labels;
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < d; ++i) labels.push_back(g->label(i) + "#" + std::to_string(c + 1));
  std::map<std::pair<int, int>, LieVec> br;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const LieVec& v = g->bracket(a, b);
        if (v.empty()) continue;
        LieVec w;
        for (const auto& [k, r] : v) w.emplace(c * d + k, r);
        br[{c * d + a, c * d + b}] = std::move(w);
      }
  return std::make_shared<LieAlgebra>(n * d, std::move(labels), std::move(br),
                                      g->name() + "^+" + std::to_string(n));
}

LieAlgebra::Ptr takiff(const LieAlgebra::Ptr& g) {
  int d = g->dim();
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back("v(" + g->label(i) + ")");
  for (int i = 0; i < d; ++i) labels.push_back("x(" + g->label(i) + ")");
  std::map<std::pair<int, int>, LieVec> br;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const LieVec& v = g->bracket(a, b);
      if (v.empty()) continue;
      LieVec xx, xv, vx;
      for (const auto& [k, r] : v) {
        xx.emplace(d + k, r);  // [x_a, x_b] = x_{[a,b]}
        xv.emplace(k, r);      // [x_a, v_b] = v_{[a,b]}
        vx.emplace(k, r);      // [v_a, x_b] = -v_{[b,a]} = v_{[a,b]}
      }
      br[{d + a, d + b}] = std::move(xx);
      br[{d + a, b}] = std::move(xv);
      br[{a, d + b}] = std::move(vx);
    }
  return std::make_shared<LieAlgebra>(2 * d, std::move(labels), std::move(br),
                                      "takiff(" + g->name() + ")");
}

void LieTensor::add(const Key& k, const Rational& v) {
  if (v.is_zero()) return;
  for (int t = 0; t < arity_; ++t)
    if (k[static_cast<std::size_t>(t)] < 0 || k[static_cast<std::size_t>(t)] >= alg_->dim())
      throw std::out_of_range("LieTensor: basis index out of range");
  for (int t = arity_; t < 3; ++t)
    if (k[static_cast<std::size_t>(t)] != -1) throw std::invalid_argument("LieTensor: bad padding");
  auto it = m_.find(k);
  if (it == m_.end()) m_.emplace(k, v);
  else {
    it->second += v;
    if (it->second.is_zero()) m_.erase(it);
  }
}

Rational LieTensor::at(const Key& k) const {
  auto it = m_.find(k);
  return it == m_.end() ? Rational() : it->second;
}

LieTensor LieTensor::operator-() const { return scaled(Rational(-1)); }

LieTensor LieTensor::scaled(const Rational& c) const {
  LieTensor r(alg_, arity_);
  if (c.is_zero()) return r;
  r.m_ = m_;
  for (auto& [k, v] : r.m_) v *= c;
  return r;
}

LieTensor operator+(const LieTensor& a, const LieTensor& b) {
  if (a.alg_->dim() != b.alg_->dim() || a.arity_ != b.arity_)
    throw std::invalid_argument("LieTensor: incompatible operands");
  LieTensor r(a);
  for (const auto& [k, v] : b.m_) r.add(k, v);
  return r;
}

LieTensor operator-(const LieTensor& a, const LieTensor& b) { return a + (-b); }

bool operator==(const LieTensor& a, const LieTensor& b) {
  return a.arity_ == b.arity_ && a.alg_->dim() == b.alg_->dim() && a.m_ == b.m_;
}

LieTensor LieTensor::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw std::invalid_argument("permuted: arity mismatch");
  LieTensor r(alg_, arity_);
  for (const auto& [k, v] : m_) {
    Key nk{-1, -1, -1};
    for (int t = 0; t < arity_; ++t)
      nk[static_cast<std::size_t>(t)] = k[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)] - 1)];
    r.add(nk, v);
  }
  return r;
}

std::string LieTensor::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : m_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v << ")";
    for (int t = 0; t < arity_; ++t) os << (t ? "(x)" : " ") << alg_->label(k[static_cast<std::size_t>(t)]);
  }
  if (first) os << "0";
  return os.str();
}

LieTensor bracket_placed(const LieTensor& A, int sA1, int sA2, const LieTensor& B, int sB1,
                         int sB2) {
  const auto& alg = A.algebra();
  LieTensor out(alg, 3);
  // find the shared slot
  int shared = 0, cnt = 0;
  for (int s : {sA1, sA2})
    if (s == sB1 || s == sB2) { shared = s; ++cnt; }
  if (cnt == 0) return out;  // disjoint placements commute
  if (cnt != 1) throw std::invalid_argument("bracket_placed: slot sets must overlap in one slot");
  int aFree = sA1 == shared ? sA2 : sA1;
  int bFree = sB1 == shared ? sB2 : sB1;
  for (const auto& [ka, va] : A.terms()) {
    int au = sA1 == shared ? ka[0] : ka[1];
    int aw = sA1 == shared ? ka[1] : ka[0];
    for (const auto& [kb, vb] : B.terms()) {
      int bu = sB1 == shared ? kb[0] : kb[1];
      int bv = sB1 == shared ? kb[1] : kb[0];
      const LieVec& br = alg->bracket(au, bu);
      if (br.empty()) continue;
      Rational coeff = va * vb;
      for (const auto& [k, c] : br) {
        LieTensor::Key key{-1, -1, -1};
        key[static_cast<std::size_t>(shared - 1)] = k;
        key[static_cast<std::size_t>(aFree - 1)] = aw;
        key[static_cast<std::size_t>(bFree - 1)] = bv;
        out.add(key, coeff * c);
      }
    }
  }
  return out;
}

LieTensor cybe(const LieTensor& r) {
  if (r.arity() != 2) throw std::invalid_argument("cybe: arity-2 input required");
  LieTensor out = bracket_placed(r, 1, 2, r, 1, 3);
  out = out + bracket_placed(r, 1, 2, r, 2, 3);
  out = out + bracket_placed(r, 1, 3, r, 2, 3);
  return out;
}

bool invariance_check(const LieTensor& s) {
  if (s.arity() != 2) throw std::invalid_argument("invariance_check: arity-2 input required");
  const auto& alg = s.algebra();
  for (int x = 0; x < alg->dim(); ++x) {
    LieTensor acc(alg, 2);
    for (const auto& [k, v] : s.terms()) {
      for (const auto& [b, c] : alg->bracket(x, k[0])) acc.add({b, k[1], -1}, v * c);
      for (const auto& [b, c] : alg->bracket(x, k[1])) acc.add({k[0], b, -1}, v * c);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool invariance_check3(const LieTensor& t) {
  if (t.arity() != 3) throw std::invalid_argument("invariance_check3: arity-3 input required");
  const auto& alg = t.algebra();
  for (int x = 0; x < alg->dim(); ++x) {
    LieTensor acc(alg, 3);
    for (const auto& [k, v] : t.terms())
      for (int slot = 0; slot < 3; ++slot)
        for (const auto& [b, c] : alg->bracket(x, k[static_cast<std::size_t>(slot)])) {
          LieTensor::Key nk = k;
          nk[static_cast<std::size_t>(slot)] = b;
          acc.add(nk, v * c);
        }
    if (!acc.is_zero()) return false;
  }
  return true;
}

LieTensor delta_r(const LieTensor& r, const LieVec& x) {
  if (r.arity() != 2) throw std::invalid_argument("delta_r: arity-2 input required");
  const auto& alg = r.algebra();
  LieTensor out(alg, 2);
  for (const auto& [k, v] : r.terms()) {
    for (const auto& [xa, xc] : x) {
      // [r1, x] (x) r2 + r1 (x) [r2, x]
      for (const auto& [b, c] : alg->bracket(k[0], xa)) out.add({b, k[1], -1}, v * c * xc);
      for (const auto& [b, c] : alg->bracket(k[1], xa)) out.add({k[0], b, -1}, v * c * xc);
    }
  }
  return out;
}

LieTensor delta_r(const LieTensor& r, int basis_x) {
  return delta_r(r, LieVec{{basis_x, Rational(1)}});
}

CobracketAxioms cobracket_axioms_check(const LieTensor& r) {
  CobracketAxioms ax;
  ax.antisym = invariance_check(r + r.tau());
  ax.co_jacobi = invariance_check3(cybe(r));
  return ax;
}

}  // namespace yblab
