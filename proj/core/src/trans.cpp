#include "yblab/comb/trans.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace yblab {

std::string TransArray::str() const {
  std::ostringstream os;
  os << "[";
  for (int j = 2; j <= n_; ++j) {
    for (int i = 1; i < j; ++i) os << (*this)(i, j) << (i + 1 < j ? "," : "");
    if (j < n_) os << "|";
  }
  os << "]";
  return os.str();
}

bool TransMatrix::almost_skew() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (sign_from_color((*this)(j, i)) != -sign_from_color((*this)(i, j))) return false;
  return true;
}

std::string TransMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) os << (*this)(i, j) << (j < n_ ? "," : "");
    if (i < n_) os << ";";
  }
  os << "]";
  return os.str();
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: not a bijection of [n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

void Permutation::for_each(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

bool is_transitive_array(const TransArray& c) {
  int n = c.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (c(i, k) != c(i, j) && c(i, k) != c(j, k)) return false;
  return true;
}

bool is_transitive_matrix(const TransMatrix& a) {
  int n = a.size();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (a(i, k) != a(i, j) && a(i, k) != a(j, k)) return false;
  return true;
}

TransArray sigma_of_perm(const Permutation& w) {
  int n = w.size();
  TransArray c(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) c.set(i, j, color_from_sign(w(j) > w(i) ? 1 : -1));
  return c;
}

Permutation perm_of_sigma(const TransArray& c) {
  if (!is_transitive_array(c)) throw std::invalid_argument("perm_of_sigma: array not transitive");
  int n = c.size();
  // w(i) = 1 + #{j : w(j) < w(i)}; the comparisons come straight off the signs.
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      bool j_below = i < j ? sign_from_color(c(i, j)) == -1 : sign_from_color(c(j, i)) == 1;
      if (j_below) ++w[static_cast<std::size_t>(i - 1)];
    }
  return Permutation(std::move(w));
}

TransMatrix eps_of_signed_perm(const SignedPermData& s) {
  int n = s.w.size();
  if (static_cast<int>(s.d.size()) != n)
    throw std::invalid_argument("eps_of_signed_perm: |d| != n");
  TransMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int v = (i == j) ? s.d[static_cast<std::size_t>(i - 1)]
                       : (s.w(j) > s.w(i) ? 1 : -1);
      a.set(i, j, color_from_sign(v));
    }
  return a;
}

SignedPermData signed_perm_of_eps(const TransMatrix& a) {
  if (!is_transitive_matrix(a)) throw std::invalid_argument("signed_perm_of_eps: not transitive");
  if (!a.almost_skew()) throw std::invalid_argument("signed_perm_of_eps: not almost skew-symmetric");
  int n = a.size();
  TransArray sig(n);
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    d[static_cast<std::size_t>(i - 1)] = sign_from_color(a(i, i));
    for (int j = i + 1; j <= n; ++j) sig.set(i, j, a(i, j));
  }
  return SignedPermData{perm_of_sigma(sig), std::move(d)};
}

TransArray restrict_minus(const TransArray& c) {
  int n = c.size();
  if (n < 2) throw std::invalid_argument("restrict_minus: n >= 2 required");
  TransArray r(n - 1);
  for (int j = 2; j < n; ++j)
    for (int i = 1; i < j; ++i) r.set(i, j, c(i, j));
  return r;
}

TransArray restrict_plus(const TransArray& c) {
  int n = c.size();
  if (n < 2) throw std::invalid_argument("restrict_plus: n >= 2 required");
  TransArray r(n - 1);
  for (int j = 2; j < n; ++j)
    for (int i = 1; i < j; ++i) r.set(i, j, c(i + 1, j + 1));
  return r;
}

TransArray extend(const TransArray& c, const std::vector<ColorId>& alpha) {
  int n = c.size();
  if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("extend: |alpha| != n");
  TransArray r(n + 1);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) r.set(i, j, c(i, j));
  for (int i = 1; i <= n; ++i) r.set(i, n + 1, alpha[static_cast<std::size_t>(i - 1)]);
  return r;
}

namespace {

// DFS over the column-major flat form.  When entry (i,j) is placed, every
// triple (i',i,j), i' < i, has its other two entries placed already, so these
// are exactly the constraints to check.
void array_dfs(TransArray& c, int n, int k, int j, int i,
               const std::function<void(const TransArray&)>& fn) {
  if (j > n) {
    fn(c);
    return;
  }
  int nj = i + 1 < j ? j : j + 1;
  int ni = i + 1 < j ? i + 1 : 1;
  for (ColorId v = 0; v < k; ++v) {
    bool ok = true;
    for (int ip = 1; ip < i && ok; ++ip)
      ok = (c(ip, j) == c(ip, i)) || (c(ip, j) == v);
    if (!ok) continue;
    c.set(i, j, v);
    array_dfs(c, n, k, nj, ni, fn);
  }
}

}  // namespace

void enumerate_transitive_arrays(int n, int k,
                                 const std::function<void(const TransArray&)>& fn) {
  if (n < 1 || k < 1) throw std::invalid_argument("enumerate_transitive_arrays: n,k >= 1");
  TransArray c(n);
  if (n == 1) {
    fn(c);  // I_1 is empty; the empty array is transitive
    return;
  }
  array_dfs(c, n, k, 2, 1, fn);
}

BigInt count_transitive_arrays(int n, int k) {
  BigInt cnt(0);
  enumerate_transitive_arrays(n, k, [&](const TransArray&) { ++cnt; });
  return cnt;
}

namespace {

// Entry order: for t = 1..n, fill (1,t)..(t-1,t), then (t,1)..(t,t-1), then (t,t).
struct MatrixEntryOrder {
  explicit MatrixEntryOrder(int n) {
    for (int t = 1; t <= n; ++t) {
      for (int i = 1; i < t; ++i) order.emplace_back(i, t);
      for (int j = 1; j < t; ++j) order.emplace_back(t, j);
      order.emplace_back(t, t);
    }
  }
  std::vector<std::pair<int, int>> order;
};

// Check every constraint a(i,k) in {a(i,j), a(j,k)} that the new entry (a,b)
// completes within the already-assigned prefix.
bool matrix_entry_ok(const TransMatrix& m, const std::vector<std::vector<bool>>& set, int a, int b) {
  int n = m.size();
  auto has = [&](int i, int j) { return set[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int t = 1; t <= n; ++t) {
    // (a,b) as (i,j): triple (a,b,t) needs (b,t),(a,t)
    if (has(b, t) && has(a, t) && m(a, t) != m(a, b) && m(a, t) != m(b, t)) return false;
    // (a,b) as (j,k): triple (t,a,b) needs (t,a),(t,b)
    if (has(t, a) && has(t, b) && m(t, b) != m(t, a) && m(t, b) != m(a, b)) return false;
    // (a,b) as (i,k): triple (a,t,b) needs (a,t),(t,b)
    if (has(a, t) && has(t, b) && m(a, b) != m(a, t) && m(a, b) != m(t, b)) return false;
  }
  return true;
}

void matrix_dfs(TransMatrix& m, std::vector<std::vector<bool>>& set,
                const std::vector<std::pair<int, int>>& order, std::size_t pos, int k,
                const std::function<void(const TransMatrix&)>& fn) {
  if (pos == order.size()) {
    fn(m);
    return;
  }
  auto [a, b] = order[pos];
  set[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  for (ColorId v = 0; v < k; ++v) {
    m.set(a, b, v);
    if (matrix_entry_ok(m, set, a, b)) matrix_dfs(m, set, order, pos + 1, k, fn);
  }
  set[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = false;
}

}  // namespace

void enumerate_transitive_matrices(int n, int k,
                                   const std::function<void(const TransMatrix&)>& fn) {
  if (n < 1 || k < 1) throw std::invalid_argument("enumerate_transitive_matrices: n,k >= 1");
  TransMatrix m(n);
  MatrixEntryOrder ord(n);
  std::vector<std::vector<bool>> set(static_cast<std::size_t>(n + 1),
                                     std::vector<bool>(static_cast<std::size_t>(n + 1), false));
  matrix_dfs(m, set, ord.order, 0, k, fn);
}

BigInt count_transitive_matrices(int n, int k) {
  BigInt cnt(0);
  enumerate_transitive_matrices(n, k, [&](const TransMatrix&) { ++cnt; });
  return cnt;
}

BigInt factorial(int n) {
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt r(1);
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

BigInt stirling2(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  if (n == 0) return BigInt(k == 0 ? 1 : 0);
  static std::map<std::pair<int, int>, BigInt> memo;
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt v = stirling2(n - 1, k - 1) + BigInt(k) * stirling2(n - 1, k);
  memo.emplace(key, v);
  return v;
}

BigInt falling_factorial(const BigInt& x, int k) {
  BigInt r(1);
  for (int i = 0; i < k; ++i) r *= (x - i);
  return r;
}

namespace {

BigInt surjective_from_counts(const std::vector<BigInt>& counts, int k) {
  // counts[j] = number of colorings with <= j colors, j = 0..k
  BigInt s(0);
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(k, j) * counts[static_cast<std::size_t>(j)];
    if ((k - j) % 2 == 0) s += term;
    else s -= term;
  }
  return s;
}

}  // namespace

BigInt stirling_transitive(int n, int k) {
  if (k < 1) throw std::invalid_argument("stirling_transitive: k >= 1");
  if (n >= 2 && k >= n) return BigInt(0);  // no surjective transitive coloring onto >= n colors
  std::vector<BigInt> counts;
  counts.emplace_back(0);
  for (int j = 1; j <= k; ++j) counts.push_back(count_transitive_arrays(n, j));
  BigInt surj = surjective_from_counts(counts, k);
  return surj / factorial(k);
}

std::vector<BigInt> stirling_transitive_row(int n) {
  std::vector<BigInt> counts;
  counts.emplace_back(0);
  for (int j = 1; j <= n - 1; ++j) counts.push_back(count_transitive_arrays(n, j));
  std::vector<BigInt> row;
  for (int k = 1; k <= n - 1; ++k)
    row.push_back(surjective_from_counts(counts, k) / factorial(k));
  return row;
}

BigInt stirling_transitive_matrix(int n, int k) {
  if (k < 1) throw std::invalid_argument("stirling_transitive_matrix: k >= 1");
  std::vector<BigInt> counts;
  counts.emplace_back(0);
  for (int j = 1; j <= k; ++j) counts.push_back(count_transitive_matrices(n, j));
  BigInt surj = surjective_from_counts(counts, k);
  return surj / factorial(k);
}

BigInt bitransitive_count_formula(int n) {
  BigInt b(0);
  BigInt pow2(1);
  for (int k = 1; k <= n; ++k) {
    pow2 = BigInt(1) << k;
    b += stirling2(n, k) * pow2 * factorial(k);
  }
  return b;
}

BigInt qn_closed_form(int n, const BigInt& bn, const BigInt& x) {
  BigInt xn(1);
  for (int i = 0; i < n; ++i) xn *= x;
  BigInt pow2n = BigInt(1) << n;
  return 2 * xn - x + (bn / 2 - pow2n + 1) * x * (x - 1);
}

CountingReport counting_formulas(int n) {
  if (n < 2) throw std::invalid_argument("counting_formulas: n >= 2");
  CountingReport rep;
  rep.n = n;

  std::vector<BigInt> array_counts;  // index j = color bound
  array_counts.emplace_back(0);
  for (int j = 1; j <= std::max(4, n - 1); ++j)
    array_counts.push_back(count_transitive_arrays(n, j));

  for (int k = 1; k <= n - 1; ++k)
    rep.stirling_row.push_back(surjective_from_counts(array_counts, k) / factorial(k));

  rep.bn_formula = bitransitive_count_formula(n);
  rep.bn_direct = count_transitive_matrices(n, 2);

  for (int cs = 2; cs <= 4; ++cs) {
    rep.p_counts.push_back(array_counts[static_cast<std::size_t>(cs)]);
    BigInt v(0);
    for (int k = 1; k <= n - 1; ++k)
      v += rep.stirling_row[static_cast<std::size_t>(k - 1)] * falling_factorial(BigInt(cs), k);
    rep.p_values.push_back(v);
  }

  rep.p2_is_factorial = array_counts[2] == factorial(n);
  rep.qn_at_2 = qn_closed_form(n, rep.bn_formula, BigInt(2));
  rep.catalan_ok = rep.stirling_row.back() == catalan(n - 1);
  if (n >= 3) {
    rep.conj_value = BigInt(n - 2) * binomial(2 * n - 3, n) + binomial(2 * (n - 2), n);
    rep.conj_matches = rep.conj_value == rep.stirling_row[static_cast<std::size_t>(n - 3)];
  }

  // matrix-level falling-factorial coefficients: <K,1> = 1, <K,2> = B_n/2 - 1,
  // <K,k> = 2 S2(n,k) for k >= 3
  rep.q_coeffs.push_back(BigInt(1));
  rep.q_coeffs.push_back(rep.bn_formula / 2 - 1);
  for (int k = 3; k <= n; ++k) rep.q_coeffs.push_back(2 * stirling2(n, k));

  // verify against direct surjective matrix enumeration where affordable
  rep.matrix_stirling_ok = true;
  int kmax_direct = n <= 4 ? n : 3;
  for (int k = 1; k <= kmax_direct; ++k) {
    if (stirling_transitive_matrix(n, k) != rep.q_coeffs[static_cast<std::size_t>(k - 1)]) {
      rep.matrix_stirling_ok = false;
      break;
    }
  }

  bool pv_ok = true;
  for (std::size_t i = 0; i < rep.p_counts.size(); ++i)
    pv_ok = pv_ok && rep.p_counts[i] == rep.p_values[i];
  rep.all_ok = pv_ok && rep.p2_is_factorial && rep.catalan_ok && (n < 3 || rep.conj_matches) &&
               rep.bn_formula == rep.bn_direct && rep.qn_at_2 == rep.bn_formula &&
               rep.matrix_stirling_ok;
  return rep;
}

std::string stirling_table_csv(int n_max) {
  std::ostringstream os;
  os << "n\\k";
  for (int k = 1; k < n_max; ++k) os << "," << k;
  os << "\n";
  for (int n = 2; n <= n_max; ++n) {
    os << n;
    std::vector<BigInt> row = stirling_transitive_row(n);
    for (int k = 1; k < n_max; ++k) {
      os << ",";
      if (k < n) os << row[static_cast<std::size_t>(k - 1)].get_str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace yblab
