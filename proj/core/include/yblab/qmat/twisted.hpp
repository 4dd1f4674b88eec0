#pragma once

#include "yblab/poisson/bracket.hpp"
#include "yblab/qmat/coquasi.hpp"
#include "yblab/qmat/rewrite.hpp"

namespace yblab {

// h •_c h' in the twisted tensor power, reduced to PBW normal form.
NCPoly bullet_product(const RewriteSystem& rs, const NCPoly& h, const NCPoly& hp);

// (a • b) • c = a • (b • c) over all triples of single generators.
bool bullet_associativity_check(const RewriteSystem& rs);

// generator-level cross-leg products agree with Psi^{(c(k,l))}
bool bullet_matches_psi(const RewriteSystem& rs, const Coquasi& cq, const TransArray& c);

// m^{(n)}(h •_c h') = m^{(n)}(h) m^{(n)}(h') in the one-leg algebra, checked
// on all products of at most degree_bound generators per side.
bool qmat_mult_hom_check(const RewriteSystem& rs, int degree_bound = 2);

// residual of the flip-isomorphism condition at (i,j) = (m,1)-style corners:
//   sum R(x_{s,j}, x_{s',j'}) x_{i,s} (x) x_{i',s'}
// - sum R(x_{i,s}, x_{i',s'}) x_{s,j} (x) x_{s',j'}
// with i > j, i' = j, j' = i; words carry legs 1 and 2 of the tensor square.
NCPoly nonisom_witness(int m, int i, int j);

// every rewrite rule L -> R satisfies R(L, g) = R(R, g) and R(g, L) = R(g, R)
bool coquasi_rule_compatibility(const Coquasi& cq, int eps);

// R(a_(1), a'_(1)) a_(2) a'_(2) = R(a_(2), a'_(2)) a'_(1) a_(1) after
// normal form, on generator pairs.
bool coquasi_braiding_check(const Coquasi& cq, int eps);

// counitality R(a, 1) = eps(a) = R(1, a) on words up to the given length
bool coquasi_counital_check(const Coquasi& cq, int eps, int max_len = 2);

// dual-twist axioms for J_c on the n-fold tensor power, on generator tuples
bool dual_twist_axiom_check(int m, const TransArray& c);

// relative dual twist law for F = R on generator quadruples
bool relative_dual_twist_check(int m, int eps);

// Delta(h •_c h') = Delta(h) •_c Delta(h') on generators
bool bullet_comultiplicativity_check(const RewriteSystem& rs);

// 2 (a b - b a)/(q - q^{-1}) at q = 1 equals the Poisson bracket; covers the
// single-leg table and the sigma_id-twisted tensor square.
bool semiclassical_check_single(int m);
bool semiclassical_check_twisted_n2(int m);

// perm-isomorphism criterion specialized to n = 2 and the flip: the
// centrality condition fails exactly when the nonisom witness is nonzero
bool perm_isom_flip_fails(int m);

}  // namespace yblab
