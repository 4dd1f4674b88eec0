#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "yblab/comb/trans.hpp"

namespace yblab {

// Multi-indices are mixed-radix packed integers, leg 1 least significant.
class LegShape {
 public:
  LegShape() = default;
  explicit LegShape(std::vector<int> dims) : dims_(std::move(dims)) {
    strides_.resize(dims_.size());
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (dims_[i] < 1) throw std::invalid_argument("LegShape: dims >= 1");
      strides_[i] = s;
      s *= static_cast<std::uint64_t>(dims_[i]);
    }
    total_ = s;
  }
  static LegShape uniform(int legs, int dim) { return LegShape(std::vector<int>(static_cast<std::size_t>(legs), dim)); }

  int legs() const { return static_cast<int>(dims_.size()); }
  int dim(int leg) const { return dims_[static_cast<std::size_t>(leg - 1)]; }  // 1-based
  const std::vector<int>& dims() const { return dims_; }
  std::uint64_t total() const { return total_; }

  int digit(std::uint64_t idx, int leg) const {
    return static_cast<int>(idx / strides_[static_cast<std::size_t>(leg - 1)] %
                            static_cast<std::uint64_t>(dims_[static_cast<std::size_t>(leg - 1)]));
  }
  std::uint64_t with_digit(std::uint64_t idx, int leg, int v) const {
    std::uint64_t st = strides_[static_cast<std::size_t>(leg - 1)];
    return idx + (static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(digit(idx, leg))) * st;
  }
  std::uint64_t pack(const std::vector<int>& digits) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i)
      idx += static_cast<std::uint64_t>(digits[i]) * strides_[i];
    return idx;
  }

  friend bool operator==(const LegShape& a, const LegShape& b) { return a.dims_ == b.dims_; }
  friend bool operator!=(const LegShape& a, const LegShape& b) { return !(a == b); }

 private:
  std::vector<int> dims_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t total_ = 1;
};

template <class S>
using SparseVec = std::map<std::uint64_t, S>;

template <class S>
class TensorOp;

// Multiplicative unit recovered from a nonzero entry; creation helpers take
// it explicitly because some scalar domains carry runtime field data.
template <class S>
S derive_one(const TensorOp<S>& op);

template <class S>
void vec_add(SparseVec<S>& v, std::uint64_t key, const S& val) {
  auto it = v.find(key);
  if (it == v.end()) {
    if (!val.is_zero()) v.emplace(key, val);
  } else {
    it->second += val;
    if (it->second.is_zero()) v.erase(it);
  }
}

// Sparse exact linear operator on a tensor product of legs; column-major
// storage (column index -> sparse column), no stored zeros.
template <class S>
class TensorOp {
 public:
  TensorOp() = default;
  explicit TensorOp(LegShape shape) : shape_(std::move(shape)) {}

  static TensorOp identity(const LegShape& shape, const S& one) {
    TensorOp op(shape);
    for (std::uint64_t i = 0; i < shape.total(); ++i) op.cols_[i].emplace(i, one);
    return op;
  }

  const LegShape& shape() const { return shape_; }

  void set(std::uint64_t row, std::uint64_t col, const S& v) {
    if (v.is_zero()) { cols_[col].erase(row); if (cols_[col].empty()) cols_.erase(col); return; }
    cols_[col][row] = v;
  }
  void add(std::uint64_t row, std::uint64_t col, const S& v) {
    auto& c = cols_[col];
    auto it = c.find(row);
    if (it == c.end()) {
      if (!v.is_zero()) c.emplace(row, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) c.erase(it);
    }
    if (c.empty()) cols_.erase(col);
  }
  S at(std::uint64_t row, std::uint64_t col) const {
    auto c = cols_.find(col);
    if (c == cols_.end()) return S();
    auto it = c->second.find(row);
    return it == c->second.end() ? S() : it->second;
  }

  const std::map<std::uint64_t, SparseVec<S>>& columns() const { return cols_; }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& [c, col] : cols_) n += col.size();
    return n;
  }
  bool is_zero() const { return cols_.empty(); }

  friend bool operator==(const TensorOp& a, const TensorOp& b) {
    return a.shape_ == b.shape_ && a.cols_ == b.cols_;
  }
  friend bool operator!=(const TensorOp& a, const TensorOp& b) { return !(a == b); }

  SparseVec<S> apply(const SparseVec<S>& v) const {
    SparseVec<S> out;
    for (const auto& [key, val] : v) {
      auto c = cols_.find(key);
      if (c == cols_.end()) continue;
      for (const auto& [row, m] : c->second) vec_add(out, row, m * val);
    }
    return out;
  }

  friend TensorOp operator*(const TensorOp& a, const TensorOp& b) {  // compose: apply b first
    if (a.shape_ != b.shape_) throw std::invalid_argument("TensorOp: shape mismatch in compose");
    TensorOp r(a.shape_);
    for (const auto& [col, bc] : b.cols_) {
      SparseVec<S> rc = a.apply(bc);
      if (!rc.empty()) r.cols_.emplace(col, std::move(rc));
    }
    return r;
  }
  friend TensorOp operator+(const TensorOp& a, const TensorOp& b) {
    if (a.shape_ != b.shape_) throw std::invalid_argument("TensorOp: shape mismatch in add");
    TensorOp r(a);
    for (const auto& [col, bc] : b.cols_)
      for (const auto& [row, v] : bc) r.add(row, col, v);
    return r;
  }
  friend TensorOp operator-(const TensorOp& a, const TensorOp& b) {
    if (a.shape_ != b.shape_) throw std::invalid_argument("TensorOp: shape mismatch in sub");
    TensorOp r(a);
    for (const auto& [col, bc] : b.cols_)
      for (const auto& [row, v] : bc) r.add(row, col, -v);
    return r;
  }

  TensorOp scaled(const S& s) const {
    TensorOp r(shape_);
    if (s.is_zero()) return r;
    r.cols_ = cols_;
    for (auto& [c, col] : r.cols_)
      for (auto& [row, v] : col) v *= s;
    return r;
  }

  std::string dump() const {  // coordinate-list text, row col value per line
    std::string out;
    for (const auto& [c, col] : cols_)
      for (const auto& [r, v] : col)
        out += std::to_string(r) + " " + std::to_string(c) + " " + v.str() + "\n";
    return out;
  }

 private:
  LegShape shape_;
  std::map<std::uint64_t, SparseVec<S>> cols_;
};

// op acting on the named legs of the enclosing shape, identity elsewhere.
// Positions are 1-based, distinct, and may be in any order (leg t of the small
// operator acts on big leg positions[t-1]).
template <class S>
struct Placed {
  TensorOp<S> op;
  std::vector<int> legs;
};

template <class S>
SparseVec<S> apply_placed(const Placed<S>& f, const LegShape& big, const SparseVec<S>& v) {
  const LegShape& small = f.op.shape();
  const int k = small.legs();
  {
    std::vector<bool> seen(static_cast<std::size_t>(big.legs()) + 1, false);
    if (static_cast<int>(f.legs.size()) != k)
      throw std::invalid_argument("apply_placed: positions/legs mismatch");
    for (int p : f.legs) {
      if (p < 1 || p > big.legs() || seen[static_cast<std::size_t>(p)])
        throw std::invalid_argument("apply_placed: repeated or out-of-range position");
      seen[static_cast<std::size_t>(p)] = true;
    }
    for (int t = 1; t <= k; ++t)
      if (small.dim(t) != big.dim(f.legs[static_cast<std::size_t>(t - 1)]))
        throw std::invalid_argument("apply_placed: leg dimension mismatch");
  }
  SparseVec<S> out;
  std::vector<int> digits(static_cast<std::size_t>(k));
  for (const auto& [key, val] : v) {
    for (int t = 1; t <= k; ++t)
      digits[static_cast<std::size_t>(t - 1)] = big.digit(key, f.legs[static_cast<std::size_t>(t - 1)]);
    std::uint64_t scol = small.pack(digits);
    auto c = f.op.columns().find(scol);
    if (c == f.op.columns().end()) continue;
    for (const auto& [srow, m] : c->second) {
      std::uint64_t nk = key;
      for (int t = 1; t <= k; ++t)
        nk = big.with_digit(nk, f.legs[static_cast<std::size_t>(t - 1)], small.digit(srow, t));
      vec_add(out, nk, m * val);
    }
  }
  return out;
}

// Apply factors right-to-left (factors.back() first), matching the convention
// that a product written X1 X2 ... Xr acts as X1 after ... after Xr.
template <class S>
SparseVec<S> apply_product(const std::vector<Placed<S>>& factors, const LegShape& big,
                           SparseVec<S> v) {
  for (std::size_t i = factors.size(); i-- > 0;) v = apply_placed(factors[i], big, v);
  return v;
}

template <class S>
S derive_one(const TensorOp<S>& op) {
  for (const auto& [c, col] : op.columns())
    for (const auto& [r, v] : col) return v * v.inverse();
  throw std::domain_error("derive_one: zero operator");
}

template <class S>
TensorOp<S> materialize_product(const std::vector<Placed<S>>& factors, const LegShape& big,
                                const S& one) {
  TensorOp<S> r(big);
  for (std::uint64_t col = 0; col < big.total(); ++col) {
    SparseVec<S> v{{col, one}};
    v = apply_product(factors, big, std::move(v));
    for (const auto& [row, val] : v) r.set(row, col, val);
  }
  return r;
}

template <class S>
TensorOp<S> embed(const TensorOp<S>& op, const std::vector<int>& positions, const LegShape& big) {
  if (op.is_zero()) {
    // still validate the placement
    apply_placed(Placed<S>{op, positions}, big, SparseVec<S>{});
    return TensorOp<S>(big);
  }
  return materialize_product<S>({Placed<S>{op, positions}}, big, derive_one(op));
}

// Basis-vector permutation operator: column (i_1..i_n) maps to the basis
// vector with digit sigma(t) of the image read from digit t, i.e. the linear
// map v_1 x ... x v_n -> v_{sigma(1)} x ... x v_{sigma(n)}.
template <class S>
TensorOp<S> perm_op(const Permutation& sigma, const LegShape& shape, const S& one) {
  if (sigma.size() != shape.legs()) throw std::invalid_argument("perm_op: size mismatch");
  std::vector<int> out_dims(static_cast<std::size_t>(shape.legs()));
  for (int t = 1; t <= shape.legs(); ++t)
    out_dims[static_cast<std::size_t>(t - 1)] = shape.dim(sigma(t));
  LegShape out_shape(out_dims);
  if (out_shape != shape)
    throw std::invalid_argument("perm_op: permutation must preserve the dimension profile");
  TensorOp<S> r(shape);
  std::vector<int> digits(static_cast<std::size_t>(shape.legs()));
  for (std::uint64_t col = 0; col < shape.total(); ++col) {
    for (int t = 1; t <= shape.legs(); ++t)
      digits[static_cast<std::size_t>(t - 1)] = shape.digit(col, sigma(t));
    r.set(shape.pack(digits), col, one);
  }
  return r;
}

// The Grassmann block swap on 2n legs, exchanging legs [1..n] and [n+1..2n].
inline Permutation grassmann_swap(int two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("grassmann_swap: even leg count required");
  int n = two_n / 2;
  std::vector<int> w(static_cast<std::size_t>(two_n));
  for (int i = 1; i <= n; ++i) {
    w[static_cast<std::size_t>(i - 1)] = i + n;
    w[static_cast<std::size_t>(i + n - 1)] = i;
  }
  return Permutation(std::move(w));
}

// X^{op}: conjugation by the block swap (the Sweedler-component relabeling).
template <class S>
TensorOp<S> block_swap(const TensorOp<S>& op) {
  const LegShape& sh = op.shape();
  grassmann_swap(sh.legs());  // validates the leg count
  if (op.is_zero()) return op;
  TensorOp<S> p = perm_op<S>(grassmann_swap(sh.legs()), sh, derive_one(op));
  return p * op * p;
}

// Exact inverse by Gauss-Jordan elimination over the scalar field.
template <class S>
TensorOp<S> invert(const TensorOp<S>& op) {
  const LegShape& sh = op.shape();
  const std::uint64_t n = sh.total();
  if (op.is_zero()) throw std::domain_error("invert: singular operator");
  const S one = derive_one(op);
  // rows as sparse maps col -> value, augmented with the identity
  std::vector<SparseVec<S>> a(n), inv(n);
  for (const auto& [col, colmap] : op.columns())
    for (const auto& [row, v] : colmap) a[row][col] = v;
  for (std::uint64_t i = 0; i < n; ++i) inv[i][i] = one;

  for (std::uint64_t p = 0; p < n; ++p) {
    std::uint64_t pivot = n;
    for (std::uint64_t r = p; r < n; ++r) {
      auto it = a[r].find(p);
      if (it != a[r].end() && !it->second.is_zero()) { pivot = r; break; }
    }
    if (pivot == n) throw std::domain_error("invert: singular operator");
    std::swap(a[p], a[pivot]);
    std::swap(inv[p], inv[pivot]);
    S d = a[p][p].inverse();
    for (auto& [c, v] : a[p]) v *= d;
    for (auto& [c, v] : inv[p]) v *= d;
    for (std::uint64_t r = 0; r < n; ++r) {
      if (r == p) continue;
      auto it = a[r].find(p);
      if (it == a[r].end()) continue;
      S f = it->second;
      if (f.is_zero()) continue;
      for (const auto& [c, v] : a[p]) vec_add(a[r], c, -(f * v));
      for (const auto& [c, v] : inv[p]) vec_add(inv[r], c, -(f * v));
    }
  }
  TensorOp<S> r(sh);
  for (std::uint64_t row = 0; row < n; ++row)
    for (const auto& [col, v] : inv[row]) r.set(row, col, v);
  return r;
}

// Kronecker product on concatenated legs: (a ? b)(u ? v) = a(u) ? b(v).
template <class S>
TensorOp<S> kron(const TensorOp<S>& a, const TensorOp<S>& b) {
  std::vector<int> dims = a.shape().dims();
  for (int d : b.shape().dims()) dims.push_back(d);
  LegShape big(dims);
  std::vector<int> la(static_cast<std::size_t>(a.shape().legs()));
  std::vector<int> lb(static_cast<std::size_t>(b.shape().legs()));
  for (std::size_t i = 0; i < la.size(); ++i) la[i] = static_cast<int>(i) + 1;
  for (std::size_t i = 0; i < lb.size(); ++i) lb[i] = a.shape().legs() + static_cast<int>(i) + 1;
  if (a.is_zero() || b.is_zero()) return TensorOp<S>(big);
  return materialize_product<S>({Placed<S>{a, la}, Placed<S>{b, lb}}, big, derive_one(a));
}

}  // namespace yblab
