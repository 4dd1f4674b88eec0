#pragma once

#include <optional>

#include "yblab/comb/trans.hpp"
#include "yblab/qmat/ncpoly.hpp"

namespace yblab {

inline int upsilon(long x) { return x > 0 ? 1 : 0; }

// Rewriting system for the quantum-matrix algebra on n legs, size m, with the
// cross-leg commutation controlled by a sign array c on I_n (absent for n=1).
// Generator rank is leg-major, then (row, column) lexicographic; every rule
// sends a strictly descending adjacent pair to words that are ascending, so
// the leg-inversion count and then the per-leg content order both decrease.
class RewriteSystem {
 public:
  RewriteSystem(int m, int legs);                        // identity-leg relations only
  RewriteSystem(int m, const TransArray& c);             // twisted tensor power

  int m() const { return m_; }
  int legs() const { return legs_; }

  // the two-letter rewrite of g2*g1, defined when g2 > g1
  NCPoly rule(const GenId& g2, const GenId& g1) const;

  std::vector<GenId> generators() const;

 private:
  int sign_between(int k, int l) const;  // epsilon = c(k,l) as +-1
  int m_;
  int legs_;
  std::optional<TransArray> c_;
};

// Fixed point of leftmost-descent rewriting; words end up weakly increasing
// in generator rank.  The step bound guards against a defective rule set.
NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs,
                   std::size_t max_steps = 20'000'000);

// All overlap ambiguities x_a x_b x_c with a > b > c resolve both ways.
bool confluence_check(const RewriteSystem& rs);

}  // namespace yblab
