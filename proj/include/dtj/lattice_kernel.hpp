#pragma once

#include "dtj/laurent.hpp"

#include <vector>

namespace dtj {

/// One nested sum over weakly increasing tuples (n_1 <= ... <= n_K <= V):
///
///   sum over nbar of  (-1)^{sum_i sign_weight[i] n_i}
///                     * q^{const_exponent + sum_{i<j} coupling[i][j] n_i n_j
///                                         + sum_i index_exponent[i][n_i]}
///                     * top_factor[n_K] * prod_{i<K} qbinomial(n_{i+1}, n_i)
///
/// All the double twist evaluators and the root-of-unity series are
/// instances of this shape; they differ only in the tables.
struct LatticeSummand {
    int num_indices = 0;  // K
    int max_value = 0;    // V
    Exp const_exponent = 0;
    std::vector<std::vector<int>> coupling;       // K x K, upper triangle used
    std::vector<std::vector<Exp>> index_exponent; // K x (V+1)
    std::vector<int> sign_weight;                 // K
    std::vector<LaurentPoly> top_factor;          // V+1

    LatticeSummand(int K, int V);
};

/// Reference implementation: plain colex enumeration on one thread.
LaurentPoly lattice_sum_serial(const LatticeSummand& s);

/// OpenMP kernel: the colex rank range is split evenly across threads, each
/// thread unranks its chunk start once and iterates; partial sums are merged
/// at the end (exact arithmetic, order irrelevant). Falls back to the serial
/// path when built without OpenMP.
LaurentPoly lattice_sum(const LatticeSummand& s);

}  // namespace dtj
