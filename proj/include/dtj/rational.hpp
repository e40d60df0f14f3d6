#pragma once

#include "dtj/laurent.hpp"

namespace dtj {

/// Quotient of two Laurent polynomials, kept in canonical form:
///  - numerator and denominator share no polynomial factor (gcd over Z[q]),
///  - the denominator is an ordinary polynomial with nonzero constant term
///    (q-power units are absorbed into the numerator),
///  - the denominator's constant term is positive,
///  - integer content common to both sides is removed.
class RationalFn {
public:
    RationalFn() : num_(), den_(LaurentPoly::one()) {}
    RationalFn(LaurentPoly num, LaurentPoly den);
    /* implicit */ RationalFn(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
    explicit RationalFn(long c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// Conversion for reduced values with unit denominator; throws otherwise.
    const LaurentPoly& as_laurent() const;

    RationalFn operator+(const RationalFn& g) const;
    RationalFn operator-(const RationalFn& g) const;
    RationalFn operator*(const RationalFn& g) const;
    RationalFn operator/(const RationalFn& g) const;
    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& g) { *this = *this + g; return *this; }
    RationalFn& operator-=(const RationalFn& g) { *this = *this - g; return *this; }
    RationalFn& operator*=(const RationalFn& g) { *this = *this * g; return *this; }
    RationalFn& operator/=(const RationalFn& g) { *this = *this / g; return *this; }

    /// Canonical forms make equality structural.
    bool operator==(const RationalFn&) const = default;

private:
    void reduce();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// prod_{k=0}^{n-1} (1 - x q^k) for a rational x; used by the Bailey lemma
/// with specialised rho parameters.
RationalFn rf_pochhammer(const RationalFn& x, int n);

}  // namespace dtj
