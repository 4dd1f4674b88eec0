#pragma once

#include <compare>
#include <map>
#include <string>

#include "yblab/util/rational.hpp"

namespace yblab {

// Commutative generators: matrix entries x, inverse entries xbar, and the
// abelian-ideal coordinates y, each tagged with a tensor leg.
enum class PKind : int { X = 0, XBar = 1, Y = 2 };

struct PGen {
  PKind kind;
  int leg;
  int i;
  int j;
  friend auto operator<=>(const PGen&, const PGen&) = default;
};

std::string pgen_str(const PGen& g);

using PMonomial = std::map<PGen, int>;  // exponents >= 1

// Sparse commutative polynomial over Q.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(const Rational& c) { add(PMonomial{}, c); }
  static CPoly gen(const PGen& g) {
    CPoly p;
    p.add(PMonomial{{g, 1}}, Rational(1));
    return p;
  }
  static CPoly one() { return CPoly(Rational(1)); }

  bool is_zero() const { return t_.empty(); }
  const std::map<PMonomial, Rational>& terms() const { return t_; }

  void add(PMonomial m, const Rational& c);
  CPoly operator-() const;
  friend CPoly operator+(const CPoly& a, const CPoly& b);
  friend CPoly operator-(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  CPoly scaled(const Rational& c) const;
  friend bool operator==(const CPoly& a, const CPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }

  // substitute leg tags (monomials merge); used by the multiplication map
  CPoly collapse_legs(int to_leg = 1) const;

  Rational evaluate(const std::map<PGen, Rational>& point) const;

  std::string str() const;

 private:
  std::map<PMonomial, Rational> t_;
};

}  // namespace yblab
