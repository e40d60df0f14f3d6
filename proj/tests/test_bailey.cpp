#include "dtj/bailey.hpp"

#include "dtj/cjp.hpp"
#include "dtj/qseries.hpp"

#include <doctest.h>

using namespace dtj;

TEST_CASE("base pairs satisfy the defining relation") {
    CHECK(verify_bailey_pair(base_pair_slater(), 6));
    CHECK(verify_bailey_pair(base_pair_walsh(), 6));
}

TEST_CASE("negative control: perturbed pair fails") {
    BaileyPair broken = base_pair_slater();
    broken.beta = [](int n) { return RationalFn(LaurentPoly::one(), qpochhammer(1, n + 1)); };
    CHECK_FALSE(verify_bailey_pair(broken, 2));
}

TEST_CASE("limit step preserves the Bailey relation") {
    CHECK(verify_bailey_pair(bailey_step_limit(base_pair_slater()), 5));
    CHECK(verify_bailey_pair(bailey_step_limit(base_pair_walsh()), 5));
}

TEST_CASE("iterated steps reproduce the closed forms") {
    for (int p = 1; p <= 3; ++p) {
        BaileyPair slater = base_pair_slater();
        BaileyPair walsh = base_pair_walsh();
        for (int i = 1; i < p; ++i) {
            slater = bailey_step_limit(slater);
            walsh = bailey_step_limit(walsh);
        }
        const BaileyPair cs = iterated_pair_slater(p);
        const BaileyPair cw = iterated_pair_walsh(p);
        for (int n = 0; n <= 5; ++n) {
            CHECK(slater.alpha(n) == cs.alpha(n));
            CHECK(slater.beta(n) == cs.beta(n));
            CHECK(walsh.alpha(n) == cw.alpha(n));
            CHECK(walsh.beta(n) == cw.beta(n));
        }
    }
}

TEST_CASE("closed-form betas are the c and d chain sums") {
    for (int p = 1; p <= 3; ++p)
        for (int n = 0; n <= 5; ++n) {
            CHECK(iterated_pair_slater(p).beta(n) * RationalFn(qpochhammer(1, n)) ==
                  RationalFn(c_poly(p, n)));
            CHECK(iterated_pair_walsh(p).beta(n) * RationalFn(qpochhammer(1, n)) == d_poly(p, n));
        }
}

TEST_CASE("finite-rho lemma step at concrete specialisations") {
    const RationalFn rho1{LaurentPoly::monomial(-1)};
    const RationalFn rho2{LaurentPoly::monomial(-2)};
    const RationalFn rho3{LaurentPoly(2)};
    CHECK(verify_bailey_pair(bailey_step_finite(base_pair_slater(), rho1, rho2), 4));
    CHECK(verify_bailey_pair(bailey_step_finite(base_pair_slater(), rho1, rho3), 3));
    CHECK(verify_bailey_pair(bailey_step_finite(base_pair_walsh(), rho1, rho2), 4));
}
