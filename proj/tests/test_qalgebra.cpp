#include "dtj/cyclotomic.hpp"
#include "dtj/laurent.hpp"
#include "dtj/poly_div.hpp"
#include "dtj/poly_io.hpp"
#include "dtj/qseries.hpp"
#include "dtj/rational.hpp"

#include <doctest.h>

#include <random>

using namespace dtj;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int max_terms = 6, int exp_range = 8,
                        long coeff_range = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long long> exp(-exp_range, exp_range);
    std::uniform_int_distribution<long> coeff(-coeff_range, coeff_range);
    LaurentPoly f;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) f += LaurentPoly::monomial(exp(rng), Int(coeff(rng)));
    return f;
}

const LaurentPoly q = LaurentPoly::monomial(1);

}  // namespace

TEST_CASE("laurent basic products") {
    CHECK((q - LaurentPoly::one()) * (q + LaurentPoly::one()) ==
          laurent_from_text("-1 + q^2"));
    // (1 - q^-1) * q^-2 = q^-2 - q^-3, the factor showing up at N=2
    LaurentPoly f = LaurentPoly::one() - LaurentPoly::monomial(-1);
    f *= LaurentPoly::monomial(-2);
    CHECK(f == laurent_from_text("-q^-3 + q^-2"));
}

TEST_CASE("laurent ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        const LaurentPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * LaurentPoly::one() == f);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("invert_q negates exponents and is an involution") {
    CHECK(lp_invert_q(laurent_from_text("-q^-4 + q^-3 + q^-1")) ==
          laurent_from_text("q + q^3 - q^4"));
    CHECK(lp_invert_q(LaurentPoly::one()) == LaurentPoly::one());
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly f = random_poly(rng);
        CHECK(lp_invert_q(lp_invert_q(f)) == f);
    }
}

TEST_CASE("qpochhammer") {
    CHECK(qpochhammer(1, 2) == laurent_from_text("1 - q - q^2 + q^3"));
    CHECK(qpochhammer(5, 0) == LaurentPoly::one());
    CHECK(qpochhammer(-3, 0) == LaurentPoly::one());
    CHECK(qpochhammer(-1, 1) == laurent_from_text("-q^-1 + 1"));
    for (int n = 0; n <= 9; ++n) {
        const LaurentPoly f = qpochhammer(1, n);
        CHECK(f.coeff(0) == 1);
        CHECK(f.max_exp() == n * (n + 1) / 2);
        CHECK(f.min_exp() == 0);
    }
    // (q^{1-N})_n vanishes from n = N on: the truncation used everywhere.
    for (int N = 1; N <= 8; ++N) {
        CHECK(qpochhammer(1 - N, N).is_zero());
        CHECK_FALSE(qpochhammer(1 - N, N - 1).is_zero());
    }
}

TEST_CASE("qbinomial values and properties") {
    CHECK(qbinomial(4, 2) == laurent_from_text("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK(qbinomial(0, 0) == LaurentPoly::one());
    CHECK(qbinomial(3, -1).is_zero());
    CHECK(qbinomial(3, 4).is_zero());
    for (int n = 0; n <= 15; ++n)
        for (int k = 0; k <= n; ++k) {
            const LaurentPoly b = qbinomial(n, k);
            CHECK(b.coeff(0) == 1);
            CHECK(b.max_exp() == static_cast<Exp>(k) * (n - k));
            for (const auto& [e, c] : b.terms()) {
                CHECK(c > 0);
                CHECK(c == b.coeff(b.max_exp() - e));  // palindrome
            }
            if (n <= 12) CHECK(b == qbinomial(n, n - k));
        }
}

TEST_CASE("qmultinomial") {
    CHECK(qmultinomial(2, {1, 1}) == laurent_from_text("1 + q"));
    CHECK(qmultinomial(5, {5}) == LaurentPoly::one());
    CHECK(qmultinomial(3, {1, 1, 1}) ==
          (LaurentPoly::one() + q) * laurent_from_text("1 + q + q^2"));
    CHECK_THROWS_AS(qmultinomial(3, {1, 1}), std::invalid_argument);
    // agreement with the Pochhammer quotient definition
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> part(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> parts{part(rng), part(rng), part(rng)};
        const int n = parts[0] + parts[1] + parts[2];
        RationalFn lhs{qmultinomial(n, parts)};
        RationalFn rhs{qpochhammer(1, n)};
        for (int p : parts) rhs /= RationalFn(qpochhammer(1, p));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rational function canonical form") {
    // (q^2-1)/(q-1) reduces to q+1
    RationalFn f(laurent_from_text("-1 + q^2"), laurent_from_text("-1 + q"));
    CHECK(f.is_polynomial());
    CHECK(f.as_laurent() == laurent_from_text("1 + q"));
    // denominator normalised: constant term positive, min exponent zero
    RationalFn g(LaurentPoly::one(), LaurentPoly::monomial(2, Int(-3)));
    CHECK(g.den().min_exp() == 0);
    CHECK(g.den().coeff(0) > 0);
    CHECK(g == RationalFn(LaurentPoly::monomial(-2, Int(-1)), LaurentPoly(3)));
    CHECK_THROWS_AS(RationalFn(LaurentPoly::one(), LaurentPoly()), std::domain_error);
    CHECK_THROWS_AS(RationalFn(LaurentPoly::one(), qpochhammer(1, 2)).as_laurent(),
                    std::domain_error);
}

TEST_CASE("rational ring axioms on random triples") {
    std::mt19937 rng(13);
    auto random_rf = [&] {
        LaurentPoly den;
        while (den.is_zero()) den = random_poly(rng, 3, 3, 4);
        return RationalFn(random_poly(rng, 3, 3, 4), den);
    };
    for (int trial = 0; trial < 100; ++trial) {
        const RationalFn f = random_rf(), g = random_rf(), h = random_rf();
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        if (!g.is_zero()) CHECK(f / g * g == f);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == laurent_from_text("-1 + q"));
    CHECK(cyclotomic_poly(2) == laurent_from_text("1 + q"));
    CHECK(cyclotomic_poly(4) == laurent_from_text("1 + q^2"));
    CHECK(cyclotomic_poly(6) == laurent_from_text("1 - q + q^2"));
    for (int n = 1; n <= 30; ++n) {
        CHECK(cyclotomic_poly(n).max_exp() == euler_phi(n));
        CHECK(cyclotomic_poly(n).min_exp() == 0);
    }
}

TEST_CASE("reduce_mod_phi") {
    for (int N = 1; N <= 8; ++N)
        CHECK(reduce_mod_phi(LaurentPoly::monomial(N), N) ==
              CyclotomicElt::from_integer(N, 1));
    CHECK(reduce_mod_phi(laurent_from_text("1 + q + q^2 + q^3"), 4).is_zero());
    std::mt19937 rng(17);
    for (int N = 1; N <= 12; ++N)
        for (int trial = 0; trial < 10; ++trial) {
            const LaurentPoly f = random_poly(rng), g = random_poly(rng);
            CHECK(reduce_mod_phi(f * g, N) == reduce_mod_phi(f, N) * reduce_mod_phi(g, N));
            CHECK(reduce_mod_phi(f + g, N) == reduce_mod_phi(f, N) + reduce_mod_phi(g, N));
        }
}

TEST_CASE("galois_invert") {
    // x -> x^3 = -x mod Phi_4
    const CyclotomicElt x4 = reduce_mod_phi(LaurentPoly::monomial(1), 4);
    CHECK(galois_invert(x4) == reduce_mod_phi(LaurentPoly::monomial(1, Int(-1)), 4));
    for (int N = 1; N <= 10; ++N) {
        const CyclotomicElt c = CyclotomicElt::from_integer(N, 7);
        CHECK(galois_invert(c) == c);
    }
    std::mt19937 rng(19);
    for (int N = 1; N <= 12; ++N)
        for (int trial = 0; trial < 10; ++trial) {
            const CyclotomicElt e = reduce_mod_phi(random_poly(rng), N);
            CHECK(galois_invert(galois_invert(e)) == e);
        }
}

TEST_CASE("poly_div internals") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly f = random_poly(rng, 4, 4, 6);
        LaurentPoly g = random_poly(rng, 4, 4, 6);
        if (f.is_zero() || g.is_zero()) continue;
        f.mul_monomial(-f.min_exp(), Int(1));
        g.mul_monomial(-g.min_exp(), Int(1));
        const LaurentPoly d = poly_gcd(f, g);
        CHECK(poly_div_exact(f * g, d * d) * d * d == f * g);
    }
}
