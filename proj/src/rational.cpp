#include "dtj/rational.hpp"

#include "dtj/poly_div.hpp"

namespace dtj {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Strip q-power units so both sides are ordinary polynomials with
    // nonzero constant term.
    const Exp num_shift = num_.min_exp();
    const Exp den_shift = den_.min_exp();
    num_.mul_monomial(-num_shift, Int(1));
    den_.mul_monomial(-den_shift, Int(1));

    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    // Denominator sign: constant term positive.
    if (den_.coeff(0) < 0) {
        num_.mul_monomial(0, Int(-1));
        den_.mul_monomial(0, Int(-1));
    }
    // Re-attach the net unit to the numerator.
    num_.mul_monomial(num_shift - den_shift, Int(1));
}

const LaurentPoly& RationalFn::as_laurent() const {
    if (!is_polynomial()) throw std::domain_error("RationalFn: non-unit denominator");
    return num_;
}

RationalFn RationalFn::operator+(const RationalFn& g) const {
    if (den_ == g.den_) return RationalFn(num_ + g.num_, den_);
    return RationalFn(num_ * g.den_ + g.num_ * den_, den_ * g.den_);
}

RationalFn RationalFn::operator-(const RationalFn& g) const {
    if (den_ == g.den_) return RationalFn(num_ - g.num_, den_);
    return RationalFn(num_ * g.den_ - g.num_ * den_, den_ * g.den_);
}

RationalFn RationalFn::operator*(const RationalFn& g) const {
    return RationalFn(num_ * g.num_, den_ * g.den_);
}

RationalFn RationalFn::operator/(const RationalFn& g) const {
    if (g.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(num_ * g.den_, den_ * g.num_);
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn rf_pochhammer(const RationalFn& x, int n) {
    RationalFn r(LaurentPoly::one());
    for (int k = 0; k < n; ++k)
        r *= RationalFn(LaurentPoly::one()) - x * RationalFn(LaurentPoly::monomial(k));
    return r;
}

}  // namespace dtj
