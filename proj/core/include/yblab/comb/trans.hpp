#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "yblab/util/rational.hpp"

namespace yblab {

// Colors are dense ids 0..k-1.  The sign palette {+1,-1} maps to {0,1}.
using ColorId = int;

inline constexpr ColorId kColorPlus = 0;   // +1
inline constexpr ColorId kColorMinus = 1;  // -1

inline ColorId color_from_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("color_from_sign: sign must be +-1");
  return s == 1 ? kColorPlus : kColorMinus;
}
inline int sign_from_color(ColorId c) {
  if (c != kColorPlus && c != kColorMinus) throw std::invalid_argument("sign_from_color: not a sign color");
  return c == kColorPlus ? 1 : -1;
}

// Color assignment on the strictly upper-triangular pairs
// I_n = {(i,j) : 1 <= i < j <= n}, stored column-major: (1,2),(1,3),(2,3),...
class TransArray {
 public:
  explicit TransArray(int n, ColorId fill = 0)
      : n_(n), c_(static_cast<std::size_t>(n) * (n - 1) / 2, fill) {
    if (n < 1) throw std::invalid_argument("TransArray: n >= 1 required");
  }

  int size() const { return n_; }
  std::size_t pairs() const { return c_.size(); }

  ColorId operator()(int i, int j) const { return c_[index(i, j)]; }
  void set(int i, int j, ColorId v) { c_[index(i, j)] = v; }

  const std::vector<ColorId>& flat() const { return c_; }

  friend bool operator==(const TransArray& a, const TransArray& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator<(const TransArray& a, const TransArray& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.c_ < b.c_;
  }

  std::string str() const;

 private:
  std::size_t index(int i, int j) const {
    if (!(1 <= i && i < j && j <= n_)) throw std::out_of_range("TransArray: bad pair");
    return static_cast<std::size_t>(j - 1) * (j - 2) / 2 + static_cast<std::size_t>(i - 1);
  }
  int n_;
  std::vector<ColorId> c_;
};

// Total color assignment on [n] x [n], diagonal included.
class TransMatrix {
 public:
  explicit TransMatrix(int n, ColorId fill = 0)
      : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {
    if (n < 1) throw std::invalid_argument("TransMatrix: n >= 1 required");
  }

  int size() const { return n_; }
  ColorId operator()(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, ColorId v) { a_[index(i, j)] = v; }
  const std::vector<ColorId>& flat() const { return a_; }

  friend bool operator==(const TransMatrix& a, const TransMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator<(const TransMatrix& a, const TransMatrix& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.a_ < b.a_;
  }

  bool almost_skew() const;  // a(j,i) = -a(i,j) off-diagonal, sign palette
  std::string str() const;

 private:
  std::size_t index(int i, int j) const {
    if (!(1 <= i && i <= n_ && 1 <= j && j <= n_)) throw std::out_of_range("TransMatrix: bad pair");
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
  }
  int n_;
  std::vector<ColorId> a_;
};

// One-line notation, values 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }

  // Enumerates S_n in lexicographic one-line order.
  static void for_each(int n, const std::function<void(const Permutation&)>& fn);

 private:
  std::vector<int> w_;
};

struct SignedPermData {
  Permutation w;
  std::vector<int> d;  // entries +-1
};

bool is_transitive_array(const TransArray& c);
bool is_transitive_matrix(const TransMatrix& a);

// sigma_w(i,j) = sign(w(j) - w(i)) as a sign-palette array.
TransArray sigma_of_perm(const Permutation& w);
// Inverse of sigma_of_perm; requires a transitive sign-palette array.
Permutation perm_of_sigma(const TransArray& c);

// eps(w,d)(i,j) = delta_{ij} d_i + sign(w(j)-w(i)) as sign-palette matrix.
TransMatrix eps_of_signed_perm(const SignedPermData& s);
// Inverse; requires transitive almost-skew sign-palette matrix.
SignedPermData signed_perm_of_eps(const TransMatrix& a);

TransArray restrict_minus(const TransArray& c);  // restriction to I_{n-1}
TransArray restrict_plus(const TransArray& c);   // index-shifted restriction
TransArray extend(const TransArray& c, const std::vector<ColorId>& alpha);

// Streams every transitive coloring I_n -> [k] exactly once, in lexicographic
// order of the column-major flat form.  Column-extension backtracking: entry
// (i,j) is checked against all triples whose other two entries are already
// placed, so partial assignments are always consistent.
void enumerate_transitive_arrays(int n, int k, const std::function<void(const TransArray&)>& fn);
BigInt count_transitive_arrays(int n, int k);

// Streams every transitive matrix [n]x[n] -> [k] exactly once (growth by
// principal submatrices: column above, then row left of, each new diagonal).
void enumerate_transitive_matrices(int n, int k, const std::function<void(const TransMatrix&)>& fn);
BigInt count_transitive_matrices(int n, int k);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt catalan(int n);
BigInt stirling2(int n, int k);
BigInt falling_factorial(const BigInt& x, int k);

// Number of k-part partitions of I_n induced by surjective transitive
// colorings: (surjective count) / k!, surjectivity by inclusion-exclusion
// over the plain counts.
BigInt stirling_transitive(int n, int k);
// Full row <n,k> for k = 1..n-1; enumerates each color bound once.
std::vector<BigInt> stirling_transitive_row(int n);
// Same at the matrix level (partitions of [n] x [n]).
BigInt stirling_transitive_matrix(int n, int k);

// B_n = sum_k S2(n,k) 2^k k!
BigInt bitransitive_count_formula(int n);

struct CountingReport {
  int n = 0;
  std::vector<BigInt> stirling_row;        // <n,k> for k = 1..n-1
  BigInt bn_formula;                       // sum_k S2(n,k) 2^k k!
  BigInt bn_direct;                        // direct enumeration over 2 colors
  std::vector<BigInt> p_counts;            // direct |arrays| for |C| = 2,3,4
  std::vector<BigInt> p_values;            // sum_k <n,k> (|C|)_k for |C| = 2,3,4
  BigInt qn_at_2;                          // q_n(2) from the closed form
  std::vector<BigInt> q_coeffs;            // <K,k> matrix-level, k = 1..n
  bool p2_is_factorial = false;            // p_n(2) = n!
  bool catalan_ok = false;                 // <n,n-1> = Catalan(n-1)
  BigInt conj_value;                       // (n-2) C(2n-3,n) + C(2n-4,n)
  bool conj_matches = false;               // conj_value = <n,n-2>  (n >= 3)
  bool matrix_stirling_ok = false;         // direct matrix stirlings match q_coeffs
  bool all_ok = false;
};

CountingReport counting_formulas(int n);

// q_n(x) = 2x^n - x + (B_n/2 - 2^n + 1) x (x-1), valid for n >= 2.
BigInt qn_closed_form(int n, const BigInt& bn, const BigInt& x);

// CSV of the generalized Stirling table, rows n = 2..n_max, columns k.
std::string stirling_table_csv(int n_max);

}  // namespace yblab
