#include "dtj/cyclotomic.hpp"

#include "dtj/poly_div.hpp"

#include <map>
#include <mutex>

namespace dtj {

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::mutex phi_mutex;
std::map<int, LaurentPoly> phi_cache;

LaurentPoly cyclotomic_poly_locked(int n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    LaurentPoly xn_minus_1 = LaurentPoly::monomial(n);
    xn_minus_1 -= LaurentPoly::one();
    LaurentPoly proper = LaurentPoly::one();
    for (int d = 1; d < n; ++d)
        if (n % d == 0) proper *= cyclotomic_poly_locked(d);
    LaurentPoly phi = poly_div_exact(xn_minus_1, proper);
    phi_cache.emplace(n, phi);
    return phi;
}

}  // namespace

LaurentPoly cyclotomic_poly(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return cyclotomic_poly_locked(n);
}

CyclotomicElt::CyclotomicElt(int level, std::vector<Int> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    if (level_ < 1) throw std::invalid_argument("CyclotomicElt: level must be positive");
    if (static_cast<int>(coeffs_.size()) != euler_phi(level_))
        throw std::invalid_argument("CyclotomicElt: coefficient vector has wrong length");
}

CyclotomicElt CyclotomicElt::zero(int level) {
    return CyclotomicElt(level, std::vector<Int>(euler_phi(level)));
}

CyclotomicElt CyclotomicElt::from_integer(int level, Int c) {
    std::vector<Int> v(euler_phi(level));
    v[0] = std::move(c);
    return CyclotomicElt(level, std::move(v));
}

bool CyclotomicElt::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CyclotomicElt CyclotomicElt::operator+(const CyclotomicElt& g) const {
    if (level_ != g.level_) throw std::invalid_argument("CyclotomicElt: level mismatch");
    std::vector<Int> v = coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += g.coeffs_[i];
    return CyclotomicElt(level_, std::move(v));
}

CyclotomicElt CyclotomicElt::operator-(const CyclotomicElt& g) const {
    if (level_ != g.level_) throw std::invalid_argument("CyclotomicElt: level mismatch");
    std::vector<Int> v = coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= g.coeffs_[i];
    return CyclotomicElt(level_, std::move(v));
}

CyclotomicElt CyclotomicElt::operator*(const CyclotomicElt& g) const {
    if (level_ != g.level_) throw std::invalid_argument("CyclotomicElt: level mismatch");
    return reduce_mod_phi(to_poly() * g.to_poly(), level_);
}

LaurentPoly CyclotomicElt::to_poly() const {
    LaurentPoly f;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) f += LaurentPoly::monomial(static_cast<Exp>(i), coeffs_[i]);
    return f;
}

CyclotomicElt reduce_mod_phi(const LaurentPoly& f, int level) {
    // Fold exponents mod N first: Phi_N divides x^N - 1, so x^N = 1 in the
    // quotient and negative exponents land in [0, N).
    LaurentPoly folded;
    for (const auto& [e, c] : f.terms()) {
        Exp r = e % level;
        if (r < 0) r += level;
        folded += LaurentPoly::monomial(r, c);
    }
    LaurentPoly rem = poly_rem_monic(folded, cyclotomic_poly(level));
    std::vector<Int> v(euler_phi(level));
    for (const auto& [e, c] : rem.terms()) v[static_cast<std::size_t>(e)] = c;
    return CyclotomicElt(level, std::move(v));
}

CyclotomicElt galois_invert(const CyclotomicElt& e) {
    const int n = e.level();
    LaurentPoly image;
    const auto& v = e.coeffs();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Exp ex = static_cast<Exp>((n - static_cast<int>(i) % n) % n);
        image += LaurentPoly::monomial(ex, v[i]);
    }
    return reduce_mod_phi(image, n);
}

}  // namespace dtj
