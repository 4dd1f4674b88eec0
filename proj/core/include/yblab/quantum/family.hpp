#pragma once

#include <atomic>
#include <map>
#include <string>

#include "yblab/comb/trans.hpp"
#include "yblab/report/report.hpp"
#include "yblab/tensor/op.hpp"
#include "yblab/util/parallel.hpp"
#include "yblab/util/ratfunc.hpp"

namespace yblab {

// Family {R^{(c)}} of invertible operators on V (x) V over one scalar field.
template <class S>
struct QFamily {
  int local_dim = 0;
  std::map<ColorId, TensorOp<S>> members;
  std::map<ColorId, TensorOp<S>> inverses;
  std::string name;
  S unit;  // multiplicative one of the scalar domain

  const TensorOp<S>& member(ColorId c) const {
    auto it = members.find(c);
    if (it == members.end()) throw std::out_of_range("QFamily: unknown color");
    return it->second;
  }
  const TensorOp<S>& inverse(ColorId c) const {
    auto it = inverses.find(c);
    if (it == inverses.end()) throw std::out_of_range("QFamily: unknown color");
    return it->second;
  }
  std::vector<ColorId> palette() const {
    std::vector<ColorId> p;
    for (const auto& [c, t] : members) p.push_back(c);
    return p;
  }
};

// Standard quantum R on k^m (x) k^m over Q(q):
// R[(k,k'),(l,l')] = q^{d_{kk'}} d_{kl} d_{k'l'} + (q - q^{-1}) Y(k-k') d_{kl'} d_{k'l}.
TensorOp<RatFuncQ> standard_qR(int m);

// R^{(+1)} = R, R^{(-1)} = R_21^{-1} (flip-conjugated inverse).
template <class S>
TensorOp<S> r_eps(const TensorOp<S>& R, int eps) {
  if (eps == 1) return R;
  if (eps != -1) throw std::invalid_argument("r_eps: eps must be +-1");
  if (R.shape().legs() % 2 != 0) throw std::invalid_argument("r_eps: even leg count required");
  return block_swap(invert(R));
}

// {R, R_21^{-1}} on the sign palette {0,1}.
template <class S>
QFamily<S> pair_family(const TensorOp<S>& R, std::string name) {
  if (R.shape().legs() != 2) throw std::invalid_argument("pair_family: two-leg R required");
  QFamily<S> fam;
  fam.local_dim = R.shape().dim(1);
  fam.name = std::move(name);
  fam.unit = derive_one(R);
  TensorOp<S> rinv = invert(R);
  fam.members.emplace(kColorPlus, R);
  fam.members.emplace(kColorMinus, block_swap(rinv));
  fam.inverses.emplace(kColorPlus, rinv);
  fam.inverses.emplace(kColorMinus, block_swap(R));
  return fam;
}

// Columnwise equality of two placed-factor products on a common shape.
template <class S>
bool products_equal(const std::vector<Placed<S>>& lhs, const std::vector<Placed<S>>& rhs,
                    const LegShape& big, const S& one, bool parallel = true) {
  std::atomic<bool> equal{true};
  auto check_col = [&](std::size_t col) {
    if (!equal.load(std::memory_order_relaxed)) return;
    SparseVec<S> v{{static_cast<std::uint64_t>(col), one}};
    SparseVec<S> l = apply_product(lhs, big, v);
    SparseVec<S> r = apply_product(rhs, big, SparseVec<S>{{static_cast<std::uint64_t>(col), one}});
    if (l != r) equal.store(false, std::memory_order_relaxed);
  };
  if (parallel) parallel_for(static_cast<std::size_t>(big.total()), check_col);
  else
    for (std::size_t c = 0; c < big.total(); ++c) check_col(c);
  return equal.load();
}

// legs of block b (1-based) when a space W = V^{(x)h} occupies 3 blocks
inline std::vector<int> block_legs(int b, int h) {
  std::vector<int> v;
  for (int t = 1; t <= h; ++t) v.push_back((b - 1) * h + t);
  return v;
}
inline std::vector<int> two_block_legs(int b1, int b2, int h) {
  std::vector<int> v = block_legs(b1, h);
  for (int t : block_legs(b2, h)) v.push_back(t);
  return v;
}

// A_{12} B_{13} C_{23} = C_{23} B_{13} A_{12} on W^{(x)3}, W = V^{(x)h}.
template <class S>
bool qybe_triple_check(const TensorOp<S>& A, const TensorOp<S>& B, const TensorOp<S>& C,
                       bool parallel = true) {
  int h = A.shape().legs() / 2;
  int dim = A.shape().dim(1);
  LegShape big = LegShape::uniform(3 * h, dim);
  std::vector<Placed<S>> lhs{{A, two_block_legs(1, 2, h)},
                             {B, two_block_legs(1, 3, h)},
                             {C, two_block_legs(2, 3, h)}};
  std::vector<Placed<S>> rhs{{C, two_block_legs(2, 3, h)},
                             {B, two_block_legs(1, 3, h)},
                             {A, two_block_legs(1, 2, h)}};
  return products_equal(lhs, rhs, big, derive_one(A), parallel);
}

// R_{12} R_{13} R_{23} = R_{23} R_{13} R_{12} exactly.
template <class S>
bool qybe_check(const TensorOp<S>& R, bool parallel = true) {
  if (R.shape().legs() % 2 != 0) throw std::invalid_argument("qybe_check: even leg count required");
  return qybe_triple_check(R, R, R, parallel);
}

// R_{12}^{(c)} R_{13}^{(c')} R_{23}^{(c'')} = R_{23}^{(c'')} R_{13}^{(c')} R_{12}^{(c)},
// c' in {c, c''}.
template <class S>
bool trans_qybe_check(const QFamily<S>& fam, ColorId c, ColorId cp, ColorId cpp) {
  if (cp != c && cp != cpp)
    throw std::invalid_argument("trans_qybe_check: c' must lie in {c, c''}");
  return qybe_triple_check(fam.member(c), fam.member(cp), fam.member(cpp));
}

template <class S>
bool family_trans_qybe_all(const QFamily<S>& fam) {
  auto pal = fam.palette();
  for (ColorId c : pal)
    for (ColorId cpp : pal)
      for (ColorId cp : {c, cpp})
        if (!trans_qybe_check(fam, c, cp, cpp)) return false;
  return true;
}

// R^{(a)} = prod_{i=n..1} ( prod_{j=1..n} R^{(a_{i,j})} at legs (j, n+i) )
// as an ordered factor list (leftmost factor acts last).
template <class S>
std::vector<Placed<S>> repsmat_factors(const QFamily<S>& fam, const TransMatrix& a) {
  int n = a.size();
  std::vector<Placed<S>> fs;
  for (int i = n; i >= 1; --i)
    for (int j = 1; j <= n; ++j) fs.push_back({fam.member(a(i, j)), {j, n + i}});
  return fs;
}

template <class S>
TensorOp<S> build_R_product(const QFamily<S>& fam, const TransMatrix& a) {
  LegShape big = LegShape::uniform(2 * a.size(), fam.local_dim);
  return materialize_product(repsmat_factors(fam, a), big, fam.unit);
}

// J_c = prod->_{2<=i<=n} prod<-_{1<=j<=i-1} R^{(c(j,i))} at legs (i, n+j).
template <class S>
std::vector<Placed<S>> jc_factors(const QFamily<S>& fam, const TransArray& c, int leg_offset = 0) {
  int n = c.size();
  std::vector<Placed<S>> fs;
  for (int i = 2; i <= n; ++i)
    for (int j = i - 1; j >= 1; --j)
      fs.push_back({fam.member(c(j, i)), {i + leg_offset, n + j + leg_offset}});
  return fs;
}

// (J_c)^{-1} as a factor list: reversed order, inverse members, same legs.
template <class S>
std::vector<Placed<S>> jc_inverse_factors(const QFamily<S>& fam, const TransArray& c) {
  int n = c.size();
  std::vector<Placed<S>> fs;
  for (int i = n; i >= 2; --i)
    for (int j = 1; j <= i - 1; ++j)
      fs.push_back({fam.inverse(c(j, i)), {i, n + j}});
  return fs;
}

template <class S>
TensorOp<S> build_Jc(const QFamily<S>& fam, const TransArray& c) {
  LegShape big = LegShape::uniform(2 * c.size(), fam.local_dim);
  return materialize_product(jc_factors(fam, c), big, fam.unit);
}

// map legs through the Grassmann block swap: l -> l+n or l-n
inline std::vector<int> swap_block_legs(const std::vector<int>& legs, int n) {
  std::vector<int> out;
  for (int l : legs) out.push_back(l > n ? l - n : l + n);
  return out;
}

// R(c,d) = (J_c^{op})^{-1} R^{(d_1)}_{1,n+1} ... R^{(d_n)}_{n,2n} J_c.
template <class S>
std::vector<Placed<S>> rcd_factors(const QFamily<S>& fam, const TransArray& c,
                                   const std::vector<ColorId>& d) {
  int n = c.size();
  if (static_cast<int>(d.size()) != n) throw std::invalid_argument("rcd_factors: |d| != n");
  std::vector<Placed<S>> fs;
  for (auto f : jc_inverse_factors(fam, c)) {
    f.legs = swap_block_legs(f.legs, n);
    fs.push_back(std::move(f));
  }
  for (int i = 1; i <= n; ++i)
    fs.push_back({fam.member(d[static_cast<std::size_t>(i - 1)]), {i, n + i}});
  for (auto& f : jc_factors(fam, c)) fs.push_back(std::move(f));
  return fs;
}

template <class S>
TensorOp<S> build_Rcd(const QFamily<S>& fam, const TransArray& c, const std::vector<ColorId>& d) {
  LegShape big = LegShape::uniform(2 * c.size(), fam.local_dim);
  return materialize_product(rcd_factors(fam, c, d), big, fam.unit);
}

// Mixed braid relation: J_g (prod<-_j R^{(a_j)}_{1,m+j}) (prod<-_j R^{(a_j)}_{1,j})
// = R^{(a_m)}_{1,m} (prod<-_{2<=j<=m-1} R^{(a_j)}_{1,m+j} R^{(a_j)}_{1,j}) R^{(a_1)}_{1,m+1} J_g
// on V^{(x)(2m-1)}; guaranteed when gamma^alpha is transitive.
template <class S>
bool braid_identity_check(const QFamily<S>& fam, const TransArray& gamma,
                          const std::vector<ColorId>& alpha) {
  int m = gamma.size();
  if (static_cast<int>(alpha.size()) != m)
    throw std::invalid_argument("braid_identity_check: |alpha| != m");
  if (m < 2) throw std::invalid_argument("braid_identity_check: m >= 2");
  LegShape big = LegShape::uniform(2 * m - 1, fam.local_dim);
  auto jg = jc_factors(fam, gamma);  // uses legs 2..2m-1 only

  std::vector<Placed<S>> lhs = jg;
  for (int j = m - 1; j >= 1; --j)
    lhs.push_back({fam.member(alpha[static_cast<std::size_t>(j - 1)]), {1, m + j}});
  for (int j = m; j >= 2; --j)
    lhs.push_back({fam.member(alpha[static_cast<std::size_t>(j - 1)]), {1, j}});

  std::vector<Placed<S>> rhs;
  rhs.push_back({fam.member(alpha[static_cast<std::size_t>(m - 1)]), {1, m}});
  for (int j = m - 1; j >= 2; --j) {
    rhs.push_back({fam.member(alpha[static_cast<std::size_t>(j - 1)]), {1, m + j}});
    rhs.push_back({fam.member(alpha[static_cast<std::size_t>(j - 1)]), {1, j}});
  }
  rhs.push_back({fam.member(alpha[0]), {1, m + 1}});
  for (const auto& f : jg) rhs.push_back(f);

  return products_equal(lhs, rhs, big, fam.unit);
}

// For every transitive matrix over the palette: build R^{(a)} and check QYBE.
template <class S>
ScanReport conjecture_quantum_scan(const QFamily<S>& fam, int n) {
  if (!family_trans_qybe_all(fam))
    throw std::domain_error("conjecture_quantum_scan: family fails the transitive QYBE");
  ScanReport rep;
  rep.family = fam.name;
  rep.check = "qybe(R^(a)) over all transitive matrices";
  rep.n = n;
  std::vector<TransMatrix> cands;
  enumerate_transitive_matrices(n, static_cast<int>(fam.members.size()),
                                [&](const TransMatrix& a) { cands.push_back(a); });
  rep.total = cands.size();
  std::vector<char> ok(cands.size(), 0);
  LegShape two = LegShape::uniform(2 * n, fam.local_dim);
  parallel_for(cands.size(), [&](std::size_t idx) {
    TensorOp<S> R = materialize_product(repsmat_factors(fam, cands[idx]), two, fam.unit);
    ok[idx] = qybe_check(R, /*parallel=*/false) ? 1 : 0;
  });
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (ok[i]) ++rep.passed;
    else {
      ++rep.failed;
      rep.witnesses.push_back({cands[i].str(), 0});
    }
  }
  return rep;
}

// Operator form of the recursions splitting off the last / first index.
template <class S>
bool jc_recursion_check(const QFamily<S>& fam, const TransArray& c) {
  int n = c.size();
  if (n < 3) throw std::invalid_argument("jc_recursion_check: n >= 3");
  LegShape big = LegShape::uniform(2 * n, fam.local_dim);
  TensorOp<S> jc = build_Jc(fam, c);

  // J_c = (J_{c^-} at legs [1,2n-1] minus {n}) prod<-_{1<=i<=n-1} R^{(c(i,n))}_{n,i+n}
  TensorOp<S> jm = build_Jc(fam, restrict_minus(c));
  std::vector<int> legs1;
  for (int l = 1; l <= 2 * n - 1; ++l)
    if (l != n) legs1.push_back(l);
  std::vector<Placed<S>> f1{{jm, legs1}};
  for (int i = n - 1; i >= 1; --i) f1.push_back({fam.member(c(i, n)), {n, i + n}});
  if (materialize_product(f1, big, fam.unit) != jc) return false;

  // J_c = (J_{c^+} at legs [2,2n] minus {n+1}) prod->_{2<=i<=n} R^{(c(1,i))}_{i,n+1}
  TensorOp<S> jp = build_Jc(fam, restrict_plus(c));
  std::vector<int> legs2;
  for (int l = 2; l <= 2 * n; ++l)
    if (l != n + 1) legs2.push_back(l);
  std::vector<Placed<S>> f2{{jp, legs2}};
  for (int i = 2; i <= n; ++i) f2.push_back({fam.member(c(1, i)), {i, n + 1}});
  return materialize_product(f2, big, fam.unit) == jc;
}

// R^{(eps(w,d))} = R(sigma_w, d) as materialized operators.
template <class S>
bool spec_trans_conj_check(const QFamily<S>& fam, const Permutation& w, const std::vector<int>& d) {
  std::vector<ColorId> dc;
  for (int s : d) dc.push_back(color_from_sign(s));
  TransMatrix eps = eps_of_signed_perm({w, d});
  return build_R_product(fam, eps) == build_Rcd(fam, sigma_of_perm(w), dc);
}

}  // namespace yblab
