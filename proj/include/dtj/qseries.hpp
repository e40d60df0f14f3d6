#pragma once

#include "dtj/laurent.hpp"

#include <vector>

namespace dtj {

/// (q^c; q)_n = prod_{k=0}^{n-1} (1 - q^{c+k}). n = 0 gives 1; c may be
/// negative or zero, so the result is a genuine Laurent polynomial.
LaurentPoly qpochhammer(long c, int n);

/// Gaussian binomial [n choose k]_q, computed by the q-Pascal recursion
/// [n k] = [n-1 k] + q^{n-k} [n-1 k-1]. Returns 0 for k < 0 or k > n.
/// Results are memoised; the cache is internally synchronised, so concurrent
/// callers are safe.
LaurentPoly qbinomial(int n, int k);

/// Pre-computed triangle of q-binomials [v choose w] for 0 <= w <= v <= max_n.
/// Lattice kernels build one up front and then read it lock-free from worker
/// threads.
class QBinomialTable {
public:
    explicit QBinomialTable(int max_n);
    const LaurentPoly& operator()(int n, int k) const { return rows_[n][k]; }
    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<LaurentPoly>> rows_;
};

/// (q)_n / prod_i (q)_{parts[i]} as a product of q-binomials over partial
/// sums. Throws std::invalid_argument unless the parts sum to n.
LaurentPoly qmultinomial(int n, const std::vector<int>& parts);

}  // namespace dtj
