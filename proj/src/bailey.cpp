#include "dtj/bailey.hpp"

#include "dtj/cjp.hpp"
#include "dtj/qseries.hpp"

#include <stdexcept>

namespace dtj {

namespace {

LaurentPoly two_n_plus_one_factor(int n) {
    LaurentPoly f = LaurentPoly::one();
    f -= LaurentPoly::monomial(2 * n + 1);
    return f;
}

const LaurentPoly one_minus_q = [] {
    LaurentPoly f = LaurentPoly::one();
    f -= LaurentPoly::monomial(1);
    return f;
}();

}  // namespace

BaileyPair base_pair_slater() {
    return BaileyPair{
        "slater",
        [](int n) {
            LaurentPoly num = two_n_plus_one_factor(n);
            num.mul_monomial(static_cast<Exp>(n) * (3 * n + 1) / 2, Int(n % 2 == 0 ? 1 : -1));
            return RationalFn(num, one_minus_q);
        },
        [](int n) { return RationalFn(LaurentPoly::one(), qpochhammer(1, n)); }};
}

BaileyPair base_pair_walsh() {
    return BaileyPair{
        "walsh",
        [](int n) {
            LaurentPoly num = two_n_plus_one_factor(n);
            num.mul_monomial(static_cast<Exp>(n) * n, Int(1));
            return RationalFn(num, one_minus_q);
        },
        [](int n) {
            const LaurentPoly pn = qpochhammer(1, n);
            return RationalFn(LaurentPoly::one(), pn * pn);
        }};
}

bool verify_bailey_pair(const BaileyPair& bp, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        RationalFn lhs = bp.beta(n) * RationalFn(qpochhammer(1, n) * qpochhammer(2, 2 * n));
        RationalFn rhs;
        for (int k = 0; k <= n; ++k) {
            rhs += bp.alpha(k) *
                   RationalFn(qpochhammer(n - k + 1, k) * qpochhammer(n + k + 2, n - k));
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

BaileyPair bailey_step_limit(const BaileyPair& bp) {
    auto alpha = bp.alpha;
    auto beta = bp.beta;
    return BaileyPair{
        bp.name + "'",
        [alpha](int n) {
            RationalFn r = alpha(n);
            return r * RationalFn(LaurentPoly::monomial(static_cast<Exp>(n) * (n + 1)));
        },
        [beta](int n) {
            RationalFn sum;
            for (int k = 0; k <= n; ++k) {
                RationalFn t = beta(k) * RationalFn(LaurentPoly::monomial(static_cast<Exp>(k) * (k + 1)));
                sum += t / RationalFn(qpochhammer(1, n - k));
            }
            return sum;
        }};
}

BaileyPair bailey_step_finite(const BaileyPair& bp, const RationalFn& rho1,
                              const RationalFn& rho2) {
    auto alpha = bp.alpha;
    auto beta = bp.beta;
    const RationalFn aq{LaurentPoly::monomial(2)};  // a = q
    const RationalFn ratio = aq / (rho1 * rho2);
    const RationalFn aq_r1 = aq / rho1;
    const RationalFn aq_r2 = aq / rho2;
    return BaileyPair{
        bp.name + "+rho",
        [alpha, rho1, rho2, ratio, aq_r1, aq_r2](int n) {
            RationalFn num = rf_pochhammer(rho1, n) * rf_pochhammer(rho2, n);
            RationalFn pow{LaurentPoly::one()};
            for (int i = 0; i < n; ++i) pow *= ratio;
            return num * pow * alpha(n) / (rf_pochhammer(aq_r1, n) * rf_pochhammer(aq_r2, n));
        },
        [beta, rho1, rho2, ratio, aq_r1, aq_r2](int n) {
            RationalFn sum;
            for (int k = 0; k <= n; ++k) {
                RationalFn pow{LaurentPoly::one()};
                for (int i = 0; i < k; ++i) pow *= ratio;
                RationalFn t = rf_pochhammer(rho1, k) * rf_pochhammer(rho2, k) *
                               rf_pochhammer(ratio, n - k) * pow * beta(k);
                sum += t / RationalFn(qpochhammer(1, n - k));
            }
            return sum / (rf_pochhammer(aq_r1, n) * rf_pochhammer(aq_r2, n));
        }};
}

BaileyPair iterated_pair_slater(int p) {
    if (p < 1) throw std::invalid_argument("iterated_pair_slater: p must be >= 1");
    return BaileyPair{
        "slater^(" + std::to_string(p) + ")",
        [p](int n) {
            LaurentPoly num = two_n_plus_one_factor(n);
            num.mul_monomial(static_cast<Exp>(n) * (n - 1) / 2 +
                                 static_cast<Exp>(p) * n * (n + 1),
                             Int(n % 2 == 0 ? 1 : -1));
            return RationalFn(num, one_minus_q);
        },
        [p](int n) { return RationalFn(c_poly(p, n)) / RationalFn(qpochhammer(1, n)); }};
}

BaileyPair iterated_pair_walsh(int p) {
    if (p < 1) throw std::invalid_argument("iterated_pair_walsh: p must be >= 1");
    return BaileyPair{
        "walsh^(" + std::to_string(p) + ")",
        [p](int n) {
            LaurentPoly num = two_n_plus_one_factor(n);
            num.mul_monomial(static_cast<Exp>(p) * n * n + static_cast<Exp>(p - 1) * n, Int(1));
            return RationalFn(num, one_minus_q);
        },
        [p](int n) { return d_poly(p, n) / RationalFn(qpochhammer(1, n)); }};
}

}  // namespace dtj
