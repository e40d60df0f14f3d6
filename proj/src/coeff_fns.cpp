#include "dtj/coeff_fns.hpp"

#include <stdexcept>

namespace dtj {

namespace {

inline int mod(int a, int M) {
    int r = a % M;
    return r < 0 ? r + M : r;
}

}  // namespace

int epsilon(int i, int j, int m) {
    if (m < 1) throw std::domain_error("epsilon: m must be >= 1");
    const int M = 2 * m + 1;
    if (i < 1 || j <= i) throw std::domain_error("epsilon: need 1 <= i < j");
    if (i % M == 0) throw std::domain_error("epsilon: i must not be divisible by 2m+1");
    if (mod(j, M) == mod(m, M)) throw std::domain_error("epsilon: j = m (mod 2m+1) excluded");
    if (mod(j + i, M) == 0 || mod(j + i + 1, M) == 0) return 1;
    if (mod(j - i, M) == 0 || mod(j - i + 1, M) == 0) return -1;
    return 0;
}

int gamma_coeff(int i, int m) {
    if (m < 1) throw std::domain_error("gamma_coeff: m must be >= 1");
    if (i < 1) throw std::domain_error("gamma_coeff: i must be >= 1");
    const int r = mod(i, 2 * m + 1);
    if (r >= 1 && r <= m - 1) return 1;
    if (r == m) return 0;
    return -1;
}

int delta_coeff(int i, int j, int m) {
    if (m < 1) throw std::domain_error("delta_coeff: m must be >= 1");
    const int M = 2 * m + 1;
    if (i < 1 || j <= i) throw std::domain_error("delta_coeff: need 1 <= i < j");
    if (i % M == 0) throw std::domain_error("delta_coeff: i must not be divisible by 2m+1");
    if (mod(j, M) == mod(m + 1, M))
        throw std::domain_error("delta_coeff: j = m+1 (mod 2m+1) excluded");
    if (mod(j + i, M) == 0 || mod(j + i - 1, M) == 0) return 1;
    if (mod(j - i, M) == 0 || mod(j - i - 1, M) == 0) return -1;
    return 0;
}

int beta_coeff(int i, int m) {
    if (m < 0) throw std::domain_error("beta_coeff: m must be >= 0");
    if (i < 1) throw std::domain_error("beta_coeff: i must be >= 1");
    if (m == 0) return 0;
    const int r = mod(i, 2 * m + 1);
    if (r == 0) return 0;
    return r <= m ? 1 : -1;
}

}  // namespace dtj
