#include "dtj/laurent.hpp"

namespace dtj {

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    for (const auto& [e, c] : g.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    for (const auto& [e, c] : g.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, Int(-c));
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
    if (is_zero() || g.is_zero()) return {};
    // Dense convolution; the polynomials here are dense over a small range,
    // so the vector form beats repeated map inserts.
    const Exp amin = min_exp(), amax = max_exp();
    const Exp bmin = g.min_exp(), bmax = g.max_exp();
    const std::size_t na = static_cast<std::size_t>(amax - amin) + 1;
    const std::size_t nb = static_cast<std::size_t>(bmax - bmin) + 1;
    std::vector<Int> a(na), b(nb), out(na + nb - 1);
    for (const auto& [e, c] : terms_) a[static_cast<std::size_t>(e - amin)] = c;
    for (const auto& [e, c] : g.terms_) b[static_cast<std::size_t>(e - bmin)] = c;
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    LaurentPoly r;
    auto hint = r.terms_.end();
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k] != 0)
            hint = r.terms_.emplace_hint(r.terms_.end(), amin + bmin + static_cast<Exp>(k),
                                         std::move(out[k]));
    }
    return r;
}

void LaurentPoly::add_shifted(const LaurentPoly& g, Exp shift, int sign) {
    for (const auto& [e, c] : g.terms_) {
        auto [it, inserted] = terms_.try_emplace(e + shift, sign > 0 ? c : Int(-c));
        if (!inserted) {
            if (sign > 0)
                it->second += c;
            else
                it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
}

void LaurentPoly::mul_monomial(Exp e, const Int& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    std::map<Exp, Int> out;
    auto hint = out.end();
    for (auto& [ex, co] : terms_) hint = out.emplace_hint(out.end(), ex + e, co * c);
    terms_ = std::move(out);
}

LaurentPoly LaurentPoly::invert_q() const {
    LaurentPoly r;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.emplace_hint(r.terms_.end(), -it->first, it->second);
    return r;
}

LaurentPoly LaurentPoly::halve_exponents() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (e % 2 != 0) throw std::domain_error("halve_exponents: odd exponent survives");
        r.terms_.emplace_hint(r.terms_.end(), e / 2, c);
    }
    return r;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::vector<Int> LaurentPoly::dense_coeffs() const {
    if (is_zero()) return {};
    std::vector<Int> v(static_cast<std::size_t>(max_exp() - min_exp()) + 1);
    for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - min_exp())] = c;
    return v;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& f) {
    LaurentPoly r = f;
    r.mul_monomial(0, c);
    return r;
}

}  // namespace dtj
