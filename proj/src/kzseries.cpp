#include "dtj/kzseries.hpp"

#include "dtj/cjp.hpp"
#include "dtj/multi_index.hpp"
#include "dtj/qseries.hpp"

#include <stdexcept>

namespace dtj {

LaurentPoly F_series_truncated(int m, int p, int N) {
    return lattice_sum(thm2_summand(m, p, N, true));
}

LaurentPoly Ffrak_series_truncated(int m, int p, int N) {
    return lattice_sum(thm1_summand(m, p, N, true));
}

LaurentPoly U_series_truncated(int m, int p, int N) {
    return chain_pair_sum(m, p, N, false, true);
}

LaurentPoly Ufrak_series_truncated_at_level(int m, int p, int N) {
    return chain_pair_sum(m, p, N, true, true);
}

CyclotomicElt F_at_root(int m, int p, int N) {
    return reduce_mod_phi(F_series_truncated(m, p, N), N);
}

CyclotomicElt Ffrak_at_root(int m, int p, int N) {
    return reduce_mod_phi(Ffrak_series_truncated(m, p, N), N);
}

CyclotomicElt U_at_root(int m, int p, int N) {
    return reduce_mod_phi(U_series_truncated(m, p, N), N);
}

CyclotomicElt Ufrak_at_root(int m, int p, int N) {
    return reduce_mod_phi(Ufrak_series_truncated_at_level(m, p, N), N);
}

LaurentPoly Ufrak_series_truncated(int m, int p, int order) {
    if (m < 1 || p < 1) throw std::invalid_argument("Ufrak series requires m, p >= 1");
    // The n-th summand's lowest term is q^{p + n}; summing n <= order - p
    // captures every coefficient up to the requested order.
    LaurentPoly full;
    const int n_max = order - p;
    if (n_max >= 0) full = chain_pair_sum(m, p, n_max + 1, true, true);
    LaurentPoly out;
    for (const auto& [e, c] : full.terms()) {
        if (e <= order) out += LaurentPoly::monomial(e, c);
    }
    return out;
}

bool check_duality_1(int m, int p, int N) {
    return F_at_root(m, p, N) == galois_invert(U_at_root(m + 1, p, N));
}

bool check_duality_2(int m, int p, int N) {
    return Ffrak_at_root(m, p, N) == galois_invert(Ufrak_at_root(m + 1, p, N));
}

}  // namespace dtj
