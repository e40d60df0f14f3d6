#include "dtj/kzseries.hpp"

#include "dtj/cjp.hpp"
#include "dtj/poly_io.hpp"
#include "dtj/qseries.hpp"

#include <doctest.h>

using namespace dtj;

TEST_CASE("F at roots: classical Kontsevich-Zagier anchor") {
    CHECK(F_at_root(0, 1, 1) == CyclotomicElt::from_integer(1, 1));
    // zeta_3 * (1 + (1-zeta) + (1-zeta)(1-zeta^2)) = 1 + 6*zeta mod Phi_3
    CHECK(F_at_root(0, 1, 3) == CyclotomicElt(3, {Int(1), Int(6)}));
    // and once more from the defining sum of q * F(q)
    for (int N = 1; N <= 8; ++N) {
        LaurentPoly direct;
        for (int n = 0; n < N; ++n) {
            LaurentPoly t = qpochhammer(1, n);
            t.mul_monomial(1, Int(1));
            direct += t;
        }
        CHECK(F_at_root(0, 1, N) == reduce_mod_phi(direct, N));
    }
}

TEST_CASE("series values equal reduced colored Jones polynomials") {
    for (int p = 1; p <= 2; ++p)
        for (int N = 1; N <= 5; ++N) {
            for (int m = 0; m <= 2; ++m)
                CHECK(F_at_root(m, p, N) == reduce_mod_phi(jones_thm2(m, p, N), N));
            for (int m = 1; m <= 2; ++m) {
                CHECK(Ffrak_at_root(m, p, N) == reduce_mod_phi(jones_thm1(m, p, N), N));
                CHECK(U_at_root(m, p, N) == reduce_mod_phi(jones_thm3_neg(m, p, N), N));
                CHECK(Ufrak_at_root(m, p, N) == reduce_mod_phi(jones_thm3_pos(m, p, N), N));
            }
        }
}

TEST_CASE("series relations also hold at non-primitive roots") {
    for (int N : {4, 6})
        for (int d : {1, 2, 3}) {
            if (N % d != 0) continue;
            CHECK(reduce_mod_phi(F_series_truncated(1, 2, N), d) ==
                  reduce_mod_phi(jones_thm2(1, 2, N), d));
            CHECK(reduce_mod_phi(U_series_truncated(2, 1, N), d) ==
                  reduce_mod_phi(jones_thm3_neg(2, 1, N), d));
        }
}

TEST_CASE("duality corollaries") {
    for (int N = 1; N <= 12; ++N) CHECK(check_duality_1(0, 1, N));
    for (int N = 1; N <= 6; ++N) CHECK(check_duality_1(1, 1, N));
    for (int N = 1; N <= 6; ++N) CHECK(check_duality_2(1, 1, N));
    for (int m = 0; m <= 2; ++m)
        for (int p = 1; p <= 2; ++p)
            for (int N = 1; N <= 4; ++N) {
                CHECK(check_duality_1(m, p, N));
                if (m >= 1) CHECK(check_duality_2(m, p, N));
            }
    CHECK(check_duality_1(0, 1, 1));  // trivially rational
}

TEST_CASE("the alternative pairing of the Ufrak relation genuinely differs") {
    bool differs_somewhere = false;
    for (int m = 1; m <= 2 && !differs_somewhere; ++m)
        for (int p = 1; p <= 2 && !differs_somewhere; ++p)
            for (int N = 1; N <= 6 && !differs_somewhere; ++N)
                if (!(Ufrak_at_root(m, p, N) == reduce_mod_phi(jones_thm2(m, p, N), N)))
                    differs_somewhere = true;
    CHECK(differs_somewhere);
}

TEST_CASE("formal power series of the Ufrak specialisation") {
    const LaurentPoly t10 = Ufrak_series_truncated(1, 1, 10);
    CHECK(t10.min_exp() == 1);  // leading term q^p
    CHECK(t10.coeff(1) == 1);
    // coefficients below the truncation order are stable under more terms
    const LaurentPoly t6 = Ufrak_series_truncated(1, 1, 6);
    for (const auto& [e, c] : t6.terms()) CHECK(c == t10.coeff(e));

    // independent expansion: q * sum_n (q)_n q^n up to order 6
    LaurentPoly direct;
    for (int n = 0; n <= 6; ++n) {
        LaurentPoly t = qpochhammer(1, n);
        t.mul_monomial(1 + n, Int(1));
        direct += t;
    }
    LaurentPoly truncated;
    for (const auto& [e, c] : direct.terms())
        if (e <= 6) truncated += LaurentPoly::monomial(e, c);
    CHECK(Ufrak_series_truncated(1, 1, 6) == truncated);

    for (int m = 1; m <= 2; ++m)
        for (int p = 1; p <= 2; ++p) CHECK(Ufrak_series_truncated(m, p, 8).min_exp() == p);
}
