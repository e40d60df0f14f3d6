#pragma once

#include "dtj/lattice_kernel.hpp"
#include "dtj/laurent.hpp"
#include "dtj/rational.hpp"

namespace dtj {

// Colored Jones evaluators for the double twist knots. Sign conventions:
//   jones_thm1(m,p,N)     = J_N(K_(-m,-p))   (m, p >= 1)
//   jones_thm2(m,p,N)     = J_N(K_(-m,p))    (m >= 0, p >= 1)
//   jones_torus(p,N)      = J_N(T_(2,2p+1)) = J_N(K_(0,p))
//   jones_thm3_pos(m,p,N) = J_N(K_(m,p))     (m, p >= 1)
//   jones_thm3_neg(m,p,N) = J_N(K_(m,-p))    (m, p >= 1)
//   walsh_colored_jones(m,p,N) = J_N(K_(m,p)) for p != 0, unsimplified route.
// All are normalised to 1 on the unknot; every sum truncates at N-1 because
// (q^{1-N})_n (or (q)_n at a root of unity) kills the higher terms.

/// Summand tables for the (2m+1)p-1 fold sum of J_N(K_(-m,-p)). With
/// at_root = true the N-dependent exponent pieces are dropped and the top
/// factor becomes (q)_n: that is the partner q-series, whose value at any
/// root of unity equals the reduction of the polynomial.
LatticeSummand thm1_summand(int m, int p, int N, bool at_root);

/// Summand tables for the (2m+1)p fold sum of J_N(K_(-m,p)), m >= 0. Uses
/// the regrouped form whose i = (2m+1)p factor is split off the Pochhammer
/// prefactor; for m >= 1 it is term-for-term the displayed sum, and at m = 0
/// the two coinciding residue classes are counted twice, which is exactly
/// the torus-knot specialisation.
LatticeSummand thm2_summand(int m, int p, int N, bool at_root);

LaurentPoly jones_thm1(int m, int p, int N);
LaurentPoly jones_thm1_serial(int m, int p, int N);
LaurentPoly jones_thm2(int m, int p, int N);
LaurentPoly jones_thm2_serial(int m, int p, int N);

LaurentPoly jones_torus(int p, int N);

/// Double chain sum shared by the Habiro-type expansions and the partner
/// series: outer index n < N, an m-chain topped by n and a p-chain topped by
/// n. positive_twist selects K_(m,p) vs K_(m,-p); at_root = true builds the
/// series truncation (outer Pochhammers replaced by (q)_n, prefactor q^{±p}).
/// The 1/(q)_{n_1} denominator is cleared exactly via
/// (q^{1-N})_n/(q)_n = (-1)^n q^{n(1-N)+n(n-1)/2} [N-1 choose n] and a
/// q-multinomial over the chain differences.
LaurentPoly chain_pair_sum(int m, int p, int N, bool positive_twist, bool at_root);

LaurentPoly jones_thm3_pos(int m, int p, int N);
LaurentPoly jones_thm3_neg(int m, int p, int N);

/// c_{p,n}: chain-sum closed form (a Laurent polynomial).
LaurentPoly c_poly(int p, int n);
/// c_{p,n}: defining sum with explicit Pochhammer quotients (test oracle).
RationalFn c_poly_defining(int p, int n);
/// d_{m,n}: chain sum carrying the 1/(q)_{n_1} factor, hence rational.
RationalFn d_poly(int m, int n);
RationalFn d_poly_defining(int m, int n);
/// c_{-p,n}: the q -> 1/q transform of c_{p,n}.
LaurentPoly c_neg_poly(int p, int n);

/// Literal evaluation of the unsimplified colored Jones formula in the
/// half-power variable a (mu_i = a^{(i^2+2i)/2}), including the corrected
/// prefactor a^{2p(1-N^2)} and the 1/[N] normalisation. The reduced result
/// must have unit denominator and even a-exponents only; a^2 = q is then
/// substituted. Throws std::domain_error if either assertion fails.
LaurentPoly walsh_colored_jones(int m, int p, int N);

/// Cyclotomic-expansion reassembly for K_(1,-p): sums
/// (q^{1+N})_n (q^{1-N})_n C_n with the displayed chain-sum coefficients
/// (inner product read as running to p-1). Compare with jones_thm3_neg(1,p,N).
LaurentPoly habiro_left_torus_check(int p, int N);

}  // namespace dtj
