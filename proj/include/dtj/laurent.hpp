#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace dtj {

using Int = boost::multiprecision::cpp_int;
using Exp = long long;

/// Sparse Laurent polynomial in one variable q with arbitrary-precision
/// integer coefficients.
///
/// Canonical form: no zero coefficient is ever stored, so structural
/// equality of the term maps is ring equality. All operations return
/// canonical results; values are immutable in spirit (mutating operators
/// exist but every function in this library treats inputs as const).
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long c) { if (c != 0) terms_[0] = c; }
    explicit LaurentPoly(Int c) { if (c != 0) terms_[0] = std::move(c); }

    static LaurentPoly monomial(Exp e, Int c = Int(1)) {
        LaurentPoly f;
        if (c != 0) f.terms_[e] = std::move(c);
        return f;
    }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    const std::map<Exp, Int>& terms() const { return terms_; }

    /// Lowest/highest exponent with nonzero coefficient. Undefined on zero.
    Exp min_exp() const { return terms_.begin()->first; }
    Exp max_exp() const { return terms_.rbegin()->first; }

    Int coeff(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    std::size_t term_count() const { return terms_.size(); }

    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& g) const { LaurentPoly r = *this; r += g; return r; }
    LaurentPoly operator-(const LaurentPoly& g) const { LaurentPoly r = *this; r -= g; return r; }
    LaurentPoly operator*(const LaurentPoly& g) const;
    LaurentPoly& operator*=(const LaurentPoly& g) { *this = *this * g; return *this; }

    bool operator==(const LaurentPoly&) const = default;

    /// In place f := f + sign * q^shift * g. The accumulation primitive of
    /// all lattice sums.
    void add_shifted(const LaurentPoly& g, Exp shift, int sign);

    /// f := q^e * c * f.
    void mul_monomial(Exp e, const Int& c);

    /// q -> q^{-1}: negates every exponent.
    LaurentPoly invert_q() const;

    /// Exponent map e -> e/2. Throws std::domain_error if any exponent is odd.
    LaurentPoly halve_exponents() const;

    /// Value at q = 1 (sum of coefficients).
    Int eval_at_one() const;

    /// Dense coefficient view over [min_exp, max_exp]; empty for zero.
    std::vector<Int> dense_coeffs() const;

private:
    std::map<Exp, Int> terms_;
};

inline LaurentPoly lp_invert_q(const LaurentPoly& f) { return f.invert_q(); }

LaurentPoly operator*(const Int& c, const LaurentPoly& f);

}  // namespace dtj
