#include "dtj/takata.hpp"

#include "dtj/poly_io.hpp"
#include "dtj/qseries.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace dtj;

TEST_CASE("J_1 = 1 for every valid (l,t) up to 31") {
    for (int l = 3; l <= 31; l += 2)
        for (int t = 1; t < l; t += 2) {
            if (std::gcd(l, t) != 1) continue;
            CHECK(takata_colored_jones(TwoBridge(l, t), 1).is_one());
        }
}

TEST_CASE("b(5,3)* at N=2 is the figure-eight polynomial") {
    // K_(-1,-1) is amphichiral; hand expansion of the two-index sum.
    CHECK(takata_colored_jones(TwoBridge(5, 3), 2) ==
          laurent_from_text("q^-2 - q^-1 + 1 - q + q^2"));
}

TEST_CASE("evaluation at q=1 is 1") {
    for (int l = 5; l <= 13; l += 2)
        for (int t = 1; t < l; t += 2) {
            if (std::gcd(l, t) != 1) continue;
            for (int N = 1; N <= 4; ++N)
                CHECK(takata_colored_jones(TwoBridge(l, t), N).eval_at_one() == 1);
        }
}

TEST_CASE("parallel kernel matches serial reference") {
    for (auto [l, t, N] : {std::tuple{5, 3, 5}, {7, 5, 4}, {11, 9, 4}, {13, 9, 3}, {19, 15, 3}}) {
        CHECK(takata_colored_jones(TwoBridge(l, t), N) ==
              takata_colored_jones_serial(TwoBridge(l, t), N));
    }
}

TEST_CASE("closed form of the N-coefficient for the 10p+1 family") {
    CHECK(takata_a_closed_m2(1, {0, 0, 0, 0, 0}) == -1);
    // -n_3 - p: the n_{5j-2} blocks enter with a minus sign (the suffix-sum
    // expansion of the sign pairs leaves no positive survivor).
    CHECK(takata_a_closed_m2(1, {0, 0, 1, 1, 1}) == -2);
    CHECK_THROWS_AS(takata_a_closed_m2(1, {0, 0, 0}), std::invalid_argument);

    std::mt19937 rng(42);
    std::uniform_int_distribution<int> val(0, 7);
    for (int p = 1; p <= 3; ++p) {
        const TwoBridge tb(10 * p + 1, 8 * p + 1);
        const TakataTables tab = takata_tables_general(tb);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> nbar(5 * p);
            for (auto& v : nbar) v = val(rng);
            std::sort(nbar.begin(), nbar.end());
            CHECK(takata_a(tab, nbar) == takata_a_closed_m2(p, nbar));
        }
    }
}

TEST_CASE("rejects N < 1") {
    CHECK_THROWS_AS(takata_colored_jones(TwoBridge(5, 3), 0), std::invalid_argument);
}
