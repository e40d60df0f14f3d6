#pragma once

namespace dtj {

// The four {-1,0,1}-valued coefficient functions mod 2m+1 that drive the
// quadratic and linear exponent forms of the double twist nested sums.
// epsilon/delta_coeff reject arguments outside their side conditions;
// gamma_coeff/beta_coeff only require i >= 1.

/// +1 on j = -i, -i-1; -1 on j = i, i-1 (mod 2m+1); 0 otherwise.
/// Domain: 1 <= i < j, (2m+1) does not divide i, j != m (mod 2m+1).
int epsilon(int i, int j, int m);

/// +1 on i = 1..m-1; 0 on i = m; -1 on i = 0, m+1..2m (mod 2m+1).
int gamma_coeff(int i, int m);

/// +1 on j = -i, -i+1; -1 on j = i, i+1 (mod 2m+1); 0 otherwise.
/// Domain: 1 <= i < j, (2m+1) does not divide i, j != m+1 (mod 2m+1).
int delta_coeff(int i, int j, int m);

/// +1 on i = 1..m; -1 on i = m+1..2m; 0 on i = 0 (mod 2m+1); 0 for m = 0.
int beta_coeff(int i, int m);

}  // namespace dtj
