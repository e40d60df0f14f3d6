#pragma once

#include "dtj/laurent.hpp"

namespace dtj {

// Division and gcd machinery over Z[q]. Callers pass ordinary polynomials
// (min_exp >= 0); Laurent inputs are handled by the shift-normalising users
// in rational.cpp and cyclotomic.cpp, since q^k is a unit.

/// Remainder of f modulo a monic divisor g (integer-safe long division).
LaurentPoly poly_rem_monic(const LaurentPoly& f, const LaurentPoly& g);

/// Quotient f / g when g divides f exactly over Z[q]. Throws
/// std::domain_error if any division step is inexact or a remainder is left.
LaurentPoly poly_div_exact(const LaurentPoly& f, const LaurentPoly& g);

/// Pseudo-remainder: lc(g)^{deg f - deg g + 1} * f mod g, computed without
/// fractions.
LaurentPoly poly_pseudo_rem(const LaurentPoly& f, const LaurentPoly& g);

/// Gcd of all coefficients (positive; 0 for the zero polynomial).
Int poly_content(const LaurentPoly& f);

/// f divided by its content, with positive leading coefficient.
LaurentPoly poly_primitive_part(const LaurentPoly& f);

/// Gcd over Z[q] of ordinary polynomials via the primitive Euclidean
/// remainder sequence. Result is content-gcd times a primitive polynomial
/// with positive leading coefficient; gcd(0, g) = |g|.
LaurentPoly poly_gcd(LaurentPoly f, LaurentPoly g);

}  // namespace dtj
