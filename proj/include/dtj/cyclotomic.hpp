#pragma once

#include "dtj/laurent.hpp"

#include <vector>

namespace dtj {

/// Euler totient.
int euler_phi(int n);

/// N-th cyclotomic polynomial Phi_N(x), computed by exact division of
/// x^N - 1 by the product of Phi_d over proper divisors d. Cached.
LaurentPoly cyclotomic_poly(int n);

/// Residue in Z[x]/Phi_N(x); realises arithmetic with the primitive N-th
/// root of unity zeta_N = x mod Phi_N.
class CyclotomicElt {
public:
    CyclotomicElt(int level, std::vector<Int> coeffs);

    static CyclotomicElt zero(int level);
    static CyclotomicElt from_integer(int level, Int c);

    int level() const { return level_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    CyclotomicElt operator+(const CyclotomicElt& g) const;
    CyclotomicElt operator-(const CyclotomicElt& g) const;
    CyclotomicElt operator*(const CyclotomicElt& g) const;

    bool operator==(const CyclotomicElt&) const = default;

    /// Canonical representative of the residue, degree < phi(level).
    LaurentPoly to_poly() const;

private:
    int level_;
    std::vector<Int> coeffs_;  // length phi(level_)
};

/// Evaluation of f at zeta_N: exponents are folded mod N (x^N = 1 in the
/// quotient) and the result is reduced mod Phi_N. Ring homomorphism.
CyclotomicElt reduce_mod_phi(const LaurentPoly& f, int level);

/// The Galois substitution x -> x^{N-1}, i.e. zeta_N -> zeta_N^{-1}.
CyclotomicElt galois_invert(const CyclotomicElt& e);

}  // namespace dtj
