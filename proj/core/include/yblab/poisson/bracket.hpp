#pragma once

#include <optional>

#include "yblab/lie/family.hpp"
#include "yblab/poisson/cpoly.hpp"
#include "yblab/util/rng.hpp"

namespace yblab {

// Right (f <| x) and left (x |> f) actions of Lie algebra basis elements on
// generators, extended by derivations.  Missing entries act as zero.
struct ActionTable {
  std::map<std::pair<int, PGen>, CPoly> right;  // f <| e_a
  std::map<std::pair<int, PGen>, CPoly> left;   // e_a |> f

  const CPoly& right_of(int basis, const PGen& g) const;
  const CPoly& left_of(int basis, const PGen& g) const;
  static const CPoly kZero;
};

// (x (x) y) |><| (f (x) f') = (f <| x)(x)(f' <| y) - (x |> f)(x)(y |> f'),
// summed over the tensor terms of r; component pairs kept before mu.
std::vector<std::pair<CPoly, CPoly>> bowtie_components(const LieTensor& r, const ActionTable& act,
                                                       const PGen& f, const PGen& fp);
// mu of the above: the Poisson bracket value {f, f'} induced by r.
CPoly poisson_bowtie(const LieTensor& r, const ActionTable& act, const PGen& f, const PGen& fp);

// Skew-completed generator bracket table.
class BracketTable {
 public:
  void set(const PGen& a, const PGen& b, CPoly v);  // also records {b,a} = -v
  const CPoly& at(const PGen& a, const PGen& b) const;
  const std::map<std::pair<PGen, PGen>, CPoly>& entries() const { return e_; }

  // biderivation extension
  CPoly bracket(const CPoly& f, const CPoly& g) const;

 private:
  std::map<std::pair<PGen, PGen>, CPoly> e_;
  static const CPoly kZero;
};

// Actions of gl_m^{(+)n} on the x-generators of the n-fold matrix coordinate ring.
ActionTable glm_action_table(int m, int n);
// Actions of takiff(gl_m)^{(+)n} on {y, x, xbar} generators.
ActionTable takiff_action_table(int m, int n);

// Generator table for {.,.}_c on the n-fold matrix coordinate ring, sign
// palette colors; single-leg entries are color-blind.
BracketTable build_bracket_Amn(int n, int m, const TransArray& c);

// Takiff tensor-power table over rational colors lambda(c(k,l)).
BracketTable build_takiff_tables(int m, int n, const TransArray& c,
                                 const std::vector<Rational>& lambdas);

bool jacobi_check(const BracketTable& table, const std::vector<PGen>& gens);

// mu^{(n)}({f^{(k)}, g^{(l)}}) = {f, g} for all generators, legs collapsed.
bool poisson_mult_hom_check(const BracketTable& table, const BracketTable& single,
                            const std::vector<PGen>& gens);

// {det, x_{ij}} = 0 in the m = 2 single-leg ring.
bool det_central_check(const BracketTable& single_leg_m2);

enum class PointIdentity { skew, jacobi, hom };

struct PointCheckConfig {
  int m = 2;
  int n = 2;
  int trials = 8;
  std::uint64_t seed = 0x59422ab1;
  long coord_bound = 1 << 16;  // far above the identity degrees
};

struct PointCheckResult {
  bool passed = false;
  int trials = 0;
  long coord_bound = 0;
  std::uint64_t seed = 0;
  int degree_bound = 0;  // total degree of the strongest identity checked
  std::string note;
};

// Evaluates the chosen identity at pseudo-random exact rational points with
// xbar bound to the exact inverse of the sampled invertible matrix per leg.
// Passing certifies the identity on the localized ring up to the documented
// Schwartz-Zippel failure bound (degree_bound / coord_bound per trial).
PointCheckResult numeric_point_check(const BracketTable& table, PointIdentity which,
                                     const std::vector<PGen>& gens, const PointCheckConfig& cfg,
                                     const BracketTable* single_for_hom = nullptr);

}  // namespace yblab
