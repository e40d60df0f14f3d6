#pragma once

#include "dtj/cyclotomic.hpp"
#include "dtj/laurent.hpp"

namespace dtj {

// The generalized Kontsevich-Zagier series attached to the double twist
// knots and their partner series. None of them converges anywhere except at
// roots of unity, where the sums terminate: every term with outer index
// n >= N carries a (q)_n factor that vanishes at zeta_N. Each *_truncated
// function returns the exact Laurent polynomial of the sum truncated at
// outer index N-1; the *_at_root wrappers reduce it mod Phi_N. Evaluating
// at a non-primitive N-th root (a primitive d-th root, d | N) is reduction
// of the same truncation mod Phi_d.

LaurentPoly F_series_truncated(int m, int p, int N);      // m >= 0, p >= 1
LaurentPoly Ffrak_series_truncated(int m, int p, int N);  // m, p >= 1
LaurentPoly U_series_truncated(int m, int p, int N);      // x = -1 specialisation
LaurentPoly Ufrak_series_truncated_at_level(int m, int p, int N);

CyclotomicElt F_at_root(int m, int p, int N);
CyclotomicElt Ffrak_at_root(int m, int p, int N);
CyclotomicElt U_at_root(int m, int p, int N);
CyclotomicElt Ufrak_at_root(int m, int p, int N);

/// Formal power-series truncation of the (m,p) partner series at x = -1,
/// which is a genuine power series in q: returns all terms of q-degree
/// <= order. The n-th summand has minimal degree p + n, so only finitely
/// many contribute.
LaurentPoly Ufrak_series_truncated(int m, int p, int order);

/// First duality: the odd-family series at zeta_N equals the partner series
/// of the shifted family at zeta_N^{-1}. Checked exactly in Z[x]/Phi_N.
bool check_duality_1(int m, int p, int N);  // m >= 0

/// Second duality, for the (-m,-p) family. m >= 1.
bool check_duality_2(int m, int p, int N);

}  // namespace dtj
