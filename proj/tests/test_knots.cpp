#include "dtj/knots.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace dtj;

TEST_CASE("mirror pairings") {
    CHECK(mirror(KnotSpec{-1, -1}) == KnotSpec{2, 1});
    CHECK(mirror(KnotSpec{-1, 2}) == KnotSpec{2, -2});
    CHECK(mirror(mirror(KnotSpec{3, -2})) == KnotSpec{3, -2});
    CHECK(mirror(KnotSpec{1, -2}) == KnotSpec{0, 2});  // torus pairing K_(0,p)
    CHECK(knot_name(KnotSpec{-2, 3}) == "K(-2,3)");
}

TEST_CASE("two_bridge_params") {
    CHECK(two_bridge_params(1, 1, TwistFamily::MinusMinus) == TwoBridge(5, 3));
    CHECK(two_bridge_params(1, 1, TwistFamily::MinusPlus) == TwoBridge(7, 5));
    CHECK(two_bridge_params(2, 1, TwistFamily::MinusPlus) == TwoBridge(11, 9));
    CHECK(two_bridge_params(2, 3, TwistFamily::MinusPlus).l == 10 * 3 + 1);
    CHECK(two_bridge_params(2, 3, TwistFamily::MinusPlus).t == 8 * 3 + 1);
    CHECK_THROWS_AS(two_bridge_params(0, 1, TwistFamily::MinusMinus), std::invalid_argument);
    CHECK_THROWS_AS(two_bridge_params(1, 0, TwistFamily::MinusPlus), std::invalid_argument);
    CHECK_THROWS_AS(TwoBridge(9, 3), std::invalid_argument);   // not coprime
    CHECK_THROWS_AS(TwoBridge(8, 3), std::invalid_argument);   // even l
    CHECK_THROWS_AS(TwoBridge(5, 5), std::invalid_argument);   // l <= t
}

TEST_CASE("general tables, small cases") {
    const TakataTables tab = takata_tables_general(TwoBridge(5, 3));
    CHECK(tab.sigma == std::vector<int>{1, -1});
    CHECK(tab.ik == std::vector<int>{2, 1});
    CHECK(tab.sigma_ik == std::vector<int>{-1, 1});
    CHECK(tab.rprime == std::vector<int>{2, 1});

    // t = 1: no folding happens, so sigma = 1 and i_k = k.
    for (int l = 3; l <= 15; l += 2) {
        const TakataTables t1 = takata_tables_general(TwoBridge(l, 1));
        for (int j = 1; j <= t1.sigma.size(); ++j) {
            CHECK(t1.sigma[j - 1] == 1);
            CHECK(t1.ik[j - 1] == j);
        }
    }
}

TEST_CASE("r' inverts i_k for all small two-bridge parameters") {
    for (int l = 3; l <= 31; l += 2)
        for (int t = 1; t < l; t += 2) {
            if (std::gcd(l, t) != 1) continue;
            const TakataTables tab = takata_tables_general(TwoBridge(l, t));
            const int pp = static_cast<int>(tab.sigma.size());
            std::vector<bool> seen(pp, false);
            for (int k = 1; k <= pp; ++k) {
                CHECK(!seen[tab.ik[k - 1] - 1]);
                seen[tab.ik[k - 1] - 1] = true;
            }
            for (int j = 1; j <= pp; ++j) CHECK(tab.ik[tab.rprime[j - 1] - 1] == j);
        }
}

TEST_CASE("lemma interval algorithm matches worked m=2 shape") {
    for (int p = 1; p <= 4; ++p) {
        const TakataTables tab = takata_tables_lemma(2, p, TwistFamily::MinusPlus);
        for (int j = 1; j <= 5 * p; ++j) {
            const int r = j % 5;
            CHECK(tab.sigma[j - 1] == ((r == 1 || r == 2 || r == 3) ? 1 : -1));
        }
        for (int k = 1; k <= p; ++k) CHECK(tab.ik[k - 1] == 5 * (k - 1) + 3);
        for (int k = p + 1; k <= 2 * p; ++k) CHECK(tab.ik[k - 1] == 5 * (2 * p - k) + 4);
        for (int k = 2 * p + 1; k <= 3 * p; ++k) CHECK(tab.ik[k - 1] == 5 * k - 10 * p - 3);
        for (int k = 3 * p + 1; k <= 4 * p; ++k) CHECK(tab.ik[k - 1] == 20 * p - 5 * k + 5);
        for (int k = 4 * p + 1; k <= 5 * p; ++k) CHECK(tab.ik[k - 1] == 5 * k - 20 * p - 4);
    }
}

TEST_CASE("lemma tables equal general tables") {
    for (int m = 1; m <= 4; ++m)
        for (int p = 1; p <= 4; ++p)
            for (auto family : {TwistFamily::MinusMinus, TwistFamily::MinusPlus}) {
                CHECK(takata_tables_lemma(m, p, family) ==
                      takata_tables_general(two_bridge_params(m, p, family)));
            }
}
