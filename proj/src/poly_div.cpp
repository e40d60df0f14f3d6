#include "dtj/poly_div.hpp"

#include <algorithm>

namespace dtj {

namespace {

// Dense working form: coeffs[i] is the coefficient of q^i.
std::vector<Int> to_dense(const LaurentPoly& f) {
    if (f.is_zero()) return {};
    if (f.min_exp() < 0) throw std::domain_error("poly_div: negative exponent");
    std::vector<Int> v(static_cast<std::size_t>(f.max_exp()) + 1);
    for (const auto& [e, c] : f.terms()) v[static_cast<std::size_t>(e)] = c;
    return v;
}

LaurentPoly from_dense(const std::vector<Int>& v) {
    LaurentPoly r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r += LaurentPoly::monomial(static_cast<Exp>(i), v[i]);
    return r;
}

void trim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

LaurentPoly poly_rem_monic(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("poly_rem_monic: zero divisor");
    std::vector<Int> r = to_dense(f);
    std::vector<Int> d = to_dense(g);
    trim(d);
    if (d.back() != 1) throw std::domain_error("poly_rem_monic: divisor not monic");
    while (r.size() >= d.size()) {
        trim(r);
        if (r.size() < d.size()) break;
        Int c = r.back();
        std::size_t off = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[off + i] -= c * d[i];
    }
    trim(r);
    return from_dense(r);
}

LaurentPoly poly_div_exact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("poly_div_exact: zero divisor");
    if (f.is_zero()) return {};
    std::vector<Int> r = to_dense(f);
    std::vector<Int> d = to_dense(g);
    trim(r);
    trim(d);
    if (r.size() < d.size()) throw std::domain_error("poly_div_exact: not divisible");
    std::vector<Int> q(r.size() - d.size() + 1);
    const Int lead = d.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int top = r[k + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw std::domain_error("poly_div_exact: inexact step");
        q[k] = top / lead;
        for (std::size_t i = 0; i < d.size(); ++i) r[k + i] -= q[k] * d[i];
    }
    trim(r);
    if (!r.empty()) throw std::domain_error("poly_div_exact: nonzero remainder");
    return from_dense(q);
}

LaurentPoly poly_pseudo_rem(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("poly_pseudo_rem: zero divisor");
    std::vector<Int> r = to_dense(f);
    std::vector<Int> d = to_dense(g);
    trim(r);
    trim(d);
    const Int lead = d.back();
    while (r.size() >= d.size()) {
        Int c = r.back();
        std::size_t off = r.size() - d.size();
        for (auto& x : r) x *= lead;
        for (std::size_t i = 0; i < d.size(); ++i) r[off + i] -= c * d[i];
        trim(r);
    }
    return from_dense(r);
}

Int poly_content(const LaurentPoly& f) {
    Int g = 0;
    for (const auto& [e, c] : f.terms()) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

LaurentPoly poly_primitive_part(const LaurentPoly& f) {
    if (f.is_zero()) return {};
    Int c = poly_content(f);
    if (f.terms().rbegin()->second < 0) c = -c;
    LaurentPoly out;
    for (const auto& [e, co] : f.terms()) out += LaurentPoly::monomial(e, Int(co / c));
    return out;
}

LaurentPoly poly_gcd(LaurentPoly f, LaurentPoly g) {
    if (f.is_zero()) return poly_primitive_part(g) * LaurentPoly(poly_content(g));
    if (g.is_zero()) return poly_primitive_part(f) * LaurentPoly(poly_content(f));
    const Int cont = boost::multiprecision::gcd(poly_content(f), poly_content(g));
    f = poly_primitive_part(f);
    g = poly_primitive_part(g);
    if (f.max_exp() < g.max_exp()) std::swap(f, g);
    while (!g.is_zero()) {
        LaurentPoly r = poly_pseudo_rem(f, g);
        f = std::move(g);
        g = poly_primitive_part(r);
    }
    LaurentPoly out = f;
    out.mul_monomial(0, cont);
    return out;
}

}  // namespace dtj
