#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "yblab/util/ratfunc.hpp"

namespace yblab {

// Generator x_{i,j} on tensor leg k (1-based everywhere).
struct GenId {
  int leg;
  int i;
  int j;
  friend auto operator<=>(const GenId&, const GenId&) = default;
};

using NCWord = std::vector<GenId>;

std::string gen_str(const GenId& g);
std::string word_str(const NCWord& w);

// Linear combination of words in noncommuting generators.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(NCWord w, RatFuncQ c = RatFuncQ(1)) { add(std::move(w), std::move(c)); }
  static NCPoly one() { return NCPoly(NCWord{}); }
  static NCPoly gen(const GenId& g) { return NCPoly(NCWord{g}); }

  bool is_zero() const { return t_.empty(); }
  const std::map<NCWord, RatFuncQ>& terms() const { return t_; }

  void add(NCWord w, RatFuncQ c);
  NCPoly operator-() const;
  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);  // free concatenation
  NCPoly scaled(const RatFuncQ& c) const;
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<NCWord, RatFuncQ> t_;
};

}  // namespace yblab
