#pragma once

#include <cstdint>
#include <vector>

namespace dtj {

/// The summation lattice shared by all nested-sum formulas here: weakly
/// increasing tuples (n_1 <= n_2 <= ... <= n_K <= bound) of nonnegative
/// integers. Enumeration is colexicographic, so all tuples with a given top
/// value n_K form one contiguous rank block; the parallel kernels split the
/// rank range evenly across threads and unrank once per chunk.
class MultiIndexRange {
public:
    MultiIndexRange(int length, int bound);

    int length() const { return length_; }
    int bound() const { return bound_; }

    /// binomial(bound + length, length)
    std::uint64_t count() const;

    /// Tuple at the given colex rank.
    std::vector<int> unrank(std::uint64_t rank) const;

    /// Colex successor in place; false once the last tuple was reached.
    static bool next(std::vector<int>& tuple, int bound);

private:
    int length_;
    int bound_;
};

/// binomial(n, k) as a 64-bit count (lattice sizes here are tiny).
std::uint64_t binomial_count(int n, int k);

}  // namespace dtj
