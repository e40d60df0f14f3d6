#include "dtj/poly_io.hpp"

#include "dtj/cjp.hpp"
#include "dtj/verify.hpp"

#include <doctest.h>

#include <random>

using namespace dtj;

TEST_CASE("text rendering format") {
    CHECK(to_text(jones_torus(1, 2)) == "-q^-4 + q^-3 + q^-1");
    CHECK(to_text(LaurentPoly()) == "0");
    CHECK(to_text(LaurentPoly(1)) == "1");
    CHECK(to_text(LaurentPoly(-3)) == "-3");
    LaurentPoly f = LaurentPoly::monomial(2, Int(2));
    f -= LaurentPoly::monomial(-1);
    CHECK(to_text(f) == "-q^-1 + 2*q^2");
}

TEST_CASE("text and json round trips on random polynomials") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> nterms(0, 8);
    std::uniform_int_distribution<long long> exp(-20, 20);
    std::uniform_int_distribution<long> coeff(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly f;
        const int n = nterms(rng);
        for (int i = 0; i < n; ++i) f += LaurentPoly::monomial(exp(rng), Int(coeff(rng)));
        CHECK(laurent_from_text(to_text(f)) == f);
        CHECK(laurent_from_json(to_json(f)) == f);
    }
    // big coefficients survive the decimal-string form
    LaurentPoly big = LaurentPoly::monomial(-3, Int("123456789012345678901234567890"));
    big -= LaurentPoly::monomial(5, Int("987654321098765432109876543210"));
    CHECK(laurent_from_text(to_text(big)) == big);
    CHECK(laurent_from_json(to_json(big)) == big);
}

TEST_CASE("cyclotomic json round trip") {
    const CyclotomicElt e = reduce_mod_phi(jones_torus(1, 2), 5);
    CHECK(cyclotomic_from_json(to_json(e)) == e);
}

TEST_CASE("malformed text is rejected") {
    CHECK_THROWS_AS(laurent_from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(laurent_from_text("q^"), std::invalid_argument);
    CHECK(laurent_from_text("q") == LaurentPoly::monomial(1));
    CHECK_THROWS_AS(laurent_from_text("q^2 q^3"), std::invalid_argument);
    CHECK_THROWS_AS(laurent_from_text("*"), std::invalid_argument);
}

TEST_CASE("grid bounds parsing") {
    const GridBounds g = grid_from_string("2,3,4");
    CHECK(g.m_cap == 2);
    CHECK(g.p_cap == 3);
    CHECK(g.n_cap == 4);
    CHECK_THROWS_AS(grid_from_string("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(grid_from_string("x,y,z"), std::invalid_argument);
}

TEST_CASE("verify suite report shape") {
    const VerifyReport report = run_verify_suite("lemmas", GridBounds{1, 1, 1});
    CHECK(!report.checks.empty());
    CHECK(report.all_pass());
    const std::string json = report_to_json(report);
    CHECK(json.find("\"overall\"") != std::string::npos);
    CHECK_THROWS_AS(run_verify_suite("nonsense", std::nullopt), std::invalid_argument);
}
