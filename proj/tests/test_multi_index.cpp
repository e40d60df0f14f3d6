#include "dtj/multi_index.hpp"

#include <doctest.h>

#include <set>

using namespace dtj;

TEST_CASE("enumeration count and uniqueness") {
    for (int k = 1; k <= 5; ++k)
        for (int b = 0; b <= 4; ++b) {
            MultiIndexRange range(k, b);
            CHECK(range.count() == binomial_count(b + k, k));
            std::set<std::vector<int>> seen;
            std::vector<int> tuple(k, 0);
            do {
                for (int i = 0; i + 1 < k; ++i) CHECK(tuple[i] <= tuple[i + 1]);
                CHECK(tuple[k - 1] <= b);
                CHECK(seen.insert(tuple).second);
            } while (MultiIndexRange::next(tuple, b));
            CHECK(seen.size() == range.count());
        }
}

TEST_CASE("unrank agrees with iteration order") {
    MultiIndexRange range(4, 3);
    std::vector<int> tuple(4, 0);
    std::uint64_t rank = 0;
    do {
        CHECK(range.unrank(rank) == tuple);
        ++rank;
    } while (MultiIndexRange::next(tuple, 3));
    CHECK(rank == range.count());
}
