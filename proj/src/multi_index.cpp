#include "dtj/multi_index.hpp"

#include <stdexcept>

namespace dtj {

std::uint64_t binomial_count(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

MultiIndexRange::MultiIndexRange(int length, int bound) : length_(length), bound_(bound) {
    if (length < 1 || bound < 0) throw std::invalid_argument("MultiIndexRange: bad shape");
}

std::uint64_t MultiIndexRange::count() const {
    return binomial_count(bound_ + length_, length_);
}

std::vector<int> MultiIndexRange::unrank(std::uint64_t rank) const {
    std::vector<int> tuple(length_);
    for (int i = length_; i >= 1; --i) {
        // Tuples of length i bounded by v are counted by binomial(v + i, i);
        // pick the top entry whose block contains the rank.
        int v = 0;
        while (binomial_count(v + i, i) <= rank) ++v;
        tuple[i - 1] = v;
        rank -= binomial_count(v - 1 + i, i);
    }
    return tuple;
}

bool MultiIndexRange::next(std::vector<int>& tuple, int bound) {
    const int k = static_cast<int>(tuple.size());
    for (int i = 0; i < k; ++i) {
        const int cap = (i + 1 < k) ? tuple[i + 1] : bound;
        if (tuple[i] < cap) {
            ++tuple[i];
            for (int j = 0; j < i; ++j) tuple[j] = 0;
            return true;
        }
    }
    return false;
}

}  // namespace dtj
