#include "dtj/cjp.hpp"

#include "dtj/coeff_fns.hpp"
#include "dtj/multi_index.hpp"
#include "dtj/qseries.hpp"

#include <stdexcept>

namespace dtj {

namespace {

inline long long tri(long long n) { return n * (n + 1) / 2; }

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

LatticeSummand thm1_summand(int m, int p, int N, bool at_root) {
    require(m >= 1, "thm1 requires m >= 1");
    require(p >= 1, "thm1 requires p >= 1");
    require(N >= 1, "thm1 requires N >= 1");
    const int M = 2 * m + 1;
    const int K = M * p - 1;
    const int V = N - 1;
    LatticeSummand s(K, V);
    s.const_exponent = at_root ? static_cast<Exp>(1 - p)
                               : static_cast<Exp>(p - 1) * (N - 1);
    for (int i = 1; i <= K; ++i) {
        for (int j = i + 1; j <= K; ++j) {
            int c = 0;
            if (i % M != 0 && j % M != m % M) c = epsilon(i, j, m);
            if (j == i + 1) c -= 1;  // the -n_i n_{i+1} chain term
            s.coupling[i - 1][j - 1] = c;
        }
    }
    for (int i = 1; i <= K; ++i) {
        auto& col = s.index_exponent[i - 1];
        if (i < K) {
            const bool mid = (i % M == m % M) || (i % M == 0);
            const int g = gamma_coeff(i, m);
            for (int v = 0; v <= V; ++v) {
                if (mid) col[v] += static_cast<Exp>(N) * v + tri(v) - (at_root ? static_cast<Exp>(N) * v : 0);
                col[v] += static_cast<Exp>(g) * v;
            }
            if (mid) s.sign_weight[i - 1] = 1;
        } else {
            for (int v = 0; v <= V; ++v) col[v] -= tri(v);
            s.sign_weight[i - 1] = 1;
        }
    }
    for (int v = 0; v <= V; ++v) s.top_factor[v] = at_root ? qpochhammer(1, v) : qpochhammer(1 - N, v);
    return s;
}

LatticeSummand thm2_summand(int m, int p, int N, bool at_root) {
    require(m >= 0, "thm2 requires m >= 0");
    require(p >= 1, "thm2 requires p >= 1");
    require(N >= 1, "thm2 requires N >= 1");
    const int M = 2 * m + 1;
    const int K = M * p;
    const int V = N - 1;
    LatticeSummand s(K, V);
    s.const_exponent = at_root ? static_cast<Exp>(p) : static_cast<Exp>(p) * (1 - N);
    for (int i = 1; i <= K; ++i)
        for (int j = i + 1; j <= K; ++j)
            if (i % M != 0 && j % M != (m + 1) % M) s.coupling[i - 1][j - 1] = delta_coeff(i, j, m);
    for (int i = 1; i <= K; ++i) {
        auto& col = s.index_exponent[i - 1];
        int sign = 0;
        // Each residue class contributes its own factor; at m = 0 the two
        // classes coincide and the factor is applied twice.
        for (int cls : {(m + 1) % M, 0}) {
            if (i % M != cls) continue;
            for (int v = 0; v <= V; ++v)
                col[v] += (at_root ? 0 : -static_cast<Exp>(N) * v) + tri(v);
            sign += 1;
        }
        if (i < K) {
            const int b = beta_coeff(i, m);
            if (b != 0)
                for (int v = 0; v <= V; ++v) col[v] += static_cast<Exp>(b) * v;
        } else {
            for (int v = 0; v <= V; ++v)
                col[v] += (at_root ? 0 : static_cast<Exp>(N) * v) - static_cast<Exp>(v) * (v + 1);
        }
        s.sign_weight[i - 1] = sign;
    }
    for (int v = 0; v <= V; ++v) s.top_factor[v] = at_root ? qpochhammer(1, v) : qpochhammer(1 - N, v);
    return s;
}

LaurentPoly jones_thm1(int m, int p, int N) { return lattice_sum(thm1_summand(m, p, N, false)); }
LaurentPoly jones_thm1_serial(int m, int p, int N) {
    return lattice_sum_serial(thm1_summand(m, p, N, false));
}
LaurentPoly jones_thm2(int m, int p, int N) { return lattice_sum(thm2_summand(m, p, N, false)); }
LaurentPoly jones_thm2_serial(int m, int p, int N) {
    return lattice_sum_serial(thm2_summand(m, p, N, false));
}

LaurentPoly jones_torus(int p, int N) {
    require(p >= 1, "torus requires p >= 1");
    require(N >= 1, "torus requires N >= 1");
    LaurentPoly acc;
    std::vector<int> n(p, 0);
    do {
        Exp e = static_cast<Exp>(p) * (1 - N) - static_cast<Exp>(N) * n[p - 1];
        LaurentPoly term = qpochhammer(1 - N, n[p - 1]);
        for (int i = 0; i + 1 < p; ++i) {
            e += static_cast<Exp>(n[i]) * (n[i] + 1 - 2 * N);
            if (n[i] != 0 && n[i] != n[i + 1]) term *= qbinomial(n[i + 1], n[i]);
        }
        acc.add_shifted(term, e, +1);
    } while (MultiIndexRange::next(n, N - 1));
    return acc;
}

LaurentPoly chain_pair_sum(int m, int p, int N, bool positive_twist, bool at_root) {
    require(m >= 1, "chain sum requires m >= 1");
    require(p >= 1, "chain sum requires p >= 1");
    require(N >= 1, "chain sum requires N >= 1");
    LaurentPoly acc;
    for (int n = 0; n <= N - 1; ++n) {
        // Outer factor and the exponent/sign it carries.
        LaurentPoly outer;
        Exp base_exp = 0;
        int base_parity = 0;
        if (at_root) {
            outer = qpochhammer(1, n);
            base_exp = positive_twist ? static_cast<Exp>(p) : -static_cast<Exp>(p);
        } else {
            outer = qpochhammer(1 + N, n) * qbinomial(N - 1, n);
            base_exp = static_cast<Exp>(n) * (1 - N) + tri(n - 1);  // from (q^{1-N})_n/(q)_n
            base_parity = n;
            const Exp pre = static_cast<Exp>(p) * (1 - static_cast<Exp>(N) * N);
            base_exp += positive_twist ? pre : -pre;
        }
        if (positive_twist) {
            base_exp += n;
        } else {
            base_exp -= tri(n);
            base_parity += n;
        }

        // m-chain contributions: polynomial factor and quadratic exponent.
        std::vector<std::pair<LaurentPoly, Exp>> mchain;
        {
            std::vector<int> c(m, 0);
            c[m - 1] = n;
            std::vector<int> prefix(std::max(m - 1, 1), 0);
            bool more = true;
            while (more) {
                for (int i = 0; i + 1 < m; ++i) c[i] = prefix[i];
                Exp e = 0;
                std::vector<int> parts(m);
                parts[0] = c[0];
                for (int i = 1; i < m; ++i) parts[i] = c[i] - c[i - 1];
                for (int i = 0; i + 1 < m; ++i) e += static_cast<Exp>(c[i]) * (c[i] + 1);
                LaurentPoly f = qmultinomial(n, parts) * qpochhammer(c[0] + 1, n - c[0]);
                mchain.emplace_back(std::move(f), e);
                more = m > 1 && MultiIndexRange::next(prefix, n);
            }
        }

        // p-chain contributions.
        std::vector<std::pair<LaurentPoly, Exp>> pchain;
        {
            std::vector<int> c(p, 0);
            c[p - 1] = n;
            std::vector<int> prefix(std::max(p - 1, 1), 0);
            bool more = true;
            while (more) {
                for (int j = 0; j + 1 < p; ++j) c[j] = prefix[j];
                Exp e = 0;
                LaurentPoly f = LaurentPoly::one();
                for (int j = 0; j + 1 < p; ++j) {
                    if (positive_twist)
                        e += static_cast<Exp>(c[j]) * (c[j] + 1);
                    else
                        e -= static_cast<Exp>(c[j]) + static_cast<Exp>(c[j + 1]) * c[j];
                    if (c[j] != 0 && c[j] != c[j + 1]) f *= qbinomial(c[j + 1], c[j]);
                }
                pchain.emplace_back(std::move(f), e);
                more = p > 1 && MultiIndexRange::next(prefix, n);
            }
        }

        for (const auto& [mf, me] : mchain) {
            const LaurentPoly common = outer * mf;
            for (const auto& [pf, pe] : pchain)
                acc.add_shifted(common * pf, base_exp + me + pe,
                                base_parity % 2 == 0 ? 1 : -1);
        }
    }
    return acc;
}

LaurentPoly jones_thm3_pos(int m, int p, int N) { return chain_pair_sum(m, p, N, true, false); }
LaurentPoly jones_thm3_neg(int m, int p, int N) { return chain_pair_sum(m, p, N, false, false); }

LaurentPoly c_poly(int p, int n) {
    require(p >= 1, "c_poly requires p >= 1");
    require(n >= 0, "c_poly requires n >= 0");
    if (p == 1) return LaurentPoly::one();
    LaurentPoly acc;
    std::vector<int> prefix(p - 1, 0);
    do {
        Exp e = 0;
        LaurentPoly f = LaurentPoly::one();
        for (int j = 0; j < p - 1; ++j) {
            const int next = (j + 1 < p - 1) ? prefix[j + 1] : n;
            e += static_cast<Exp>(prefix[j]) * (prefix[j] + 1);
            if (prefix[j] != 0 && prefix[j] != next) f *= qbinomial(next, prefix[j]);
        }
        acc.add_shifted(f, e, +1);
    } while (MultiIndexRange::next(prefix, n));
    return acc;
}

RationalFn c_poly_defining(int p, int n) {
    RationalFn sum;
    for (int k = 0; k <= n; ++k) {
        LaurentPoly num = qpochhammer(1, n);
        num.mul_monomial(tri(k - 1) + static_cast<Exp>(p) * k * (k + 1), Int(k % 2 == 0 ? 1 : -1));
        num *= LaurentPoly::one() - LaurentPoly::monomial(2 * k + 1);
        sum += RationalFn(num, qpochhammer(1, n - k) * qpochhammer(1, n + k + 1));
    }
    return sum;
}

RationalFn d_poly(int m, int n) {
    require(m >= 1, "d_poly requires m >= 1");
    require(n >= 0, "d_poly requires n >= 0");
    RationalFn acc;
    std::vector<int> chain(m, 0);
    chain[m - 1] = n;
    std::vector<int> prefix(std::max(m - 1, 1), 0);
    bool more = true;
    while (more) {
        for (int i = 0; i + 1 < m; ++i) chain[i] = prefix[i];
        Exp e = 0;
        LaurentPoly f = LaurentPoly::one();
        for (int i = 0; i + 1 < m; ++i) {
            e += static_cast<Exp>(chain[i]) * (chain[i] + 1);
            if (chain[i] != 0 && chain[i] != chain[i + 1]) f *= qbinomial(chain[i + 1], chain[i]);
        }
        f.mul_monomial(e, Int(1));
        acc += RationalFn(f, qpochhammer(1, chain[0]));
        more = m > 1 && MultiIndexRange::next(prefix, n);
    }
    return acc;
}

RationalFn d_poly_defining(int m, int n) {
    RationalFn sum;
    for (int k = 0; k <= n; ++k) {
        LaurentPoly num = qpochhammer(1, n);
        num.mul_monomial(static_cast<Exp>(m) * k * k + static_cast<Exp>(m - 1) * k, Int(1));
        num *= LaurentPoly::one() - LaurentPoly::monomial(2 * k + 1);
        sum += RationalFn(num, qpochhammer(1, n - k) * qpochhammer(1, n + k + 1));
    }
    return sum;
}

LaurentPoly c_neg_poly(int p, int n) {
    require(p >= 1, "c_neg_poly requires p >= 1");
    require(n >= 0, "c_neg_poly requires n >= 0");
    LaurentPoly acc;
    if (p == 1) {
        acc = LaurentPoly::one();
    } else {
        std::vector<int> prefix(p - 1, 0);
        do {
            Exp e = 0;
            LaurentPoly f = LaurentPoly::one();
            for (int j = 0; j < p - 1; ++j) {
                const int next = (j + 1 < p - 1) ? prefix[j + 1] : n;
                e -= static_cast<Exp>(prefix[j]) + static_cast<Exp>(next) * prefix[j];
                if (prefix[j] != 0 && prefix[j] != next) f *= qbinomial(next, prefix[j]);
            }
            acc.add_shifted(f, e, +1);
        } while (MultiIndexRange::next(prefix, n));
    }
    acc.mul_monomial(-static_cast<Exp>(n) * (n + 3) / 2, Int(n % 2 == 0 ? 1 : -1));
    return acc;
}

namespace {

// Quantum-integer helpers over the half-power variable a.
LaurentPoly curly(int n) {  // a^n - a^{-n}
    LaurentPoly f = LaurentPoly::monomial(n);
    f -= LaurentPoly::monomial(-n);
    return f;
}

}  // namespace

LaurentPoly walsh_colored_jones(int m, int p, int N) {
    require(m >= 1, "walsh requires m >= 1");
    require(p != 0, "walsh requires p != 0");
    require(N >= 1, "walsh requires N >= 1");
    const RationalFn aunit{curly(1)};  // a - a^{-1}
    // {n}! and [n]! tables up to 2N.
    std::vector<LaurentPoly> curly_fact(2 * N + 1, LaurentPoly::one());
    for (int k = 1; k <= 2 * N; ++k) curly_fact[k] = curly_fact[k - 1] * curly(k);
    std::vector<RationalFn> brack_fact(2 * N + 1);
    RationalFn unit_pow{LaurentPoly::one()};
    for (int k = 0; k <= 2 * N; ++k) {
        brack_fact[k] = RationalFn(curly_fact[k]) / unit_pow;
        unit_pow *= aunit;
    }
    auto brack = [&](int n) { return RationalFn(curly(n)) / aunit; };

    RationalFn total;
    for (int n = 0; n <= N - 1; ++n) {
        RationalFn cprime;
        for (int k = 0; k <= n; ++k) {
            RationalFn term = RationalFn(LaurentPoly::monomial(
                                 static_cast<Exp>(p) * 2 * k * (k + 1), Int(k % 2 == 0 ? 1 : -1))) *
                             brack(2 * k + 1) * brack_fact[n] /
                             (brack_fact[n + k + 1] * brack_fact[n - k]);
            cprime += term;
        }
        for (int k = 0; k < n; ++k) cprime /= aunit;

        RationalFn inner;
        for (int k = 0; k <= n; ++k) {
            inner += RationalFn(LaurentPoly::monomial(
                         static_cast<Exp>(k) * (k + 1) * (2 * m - 1))) *
                     brack(2 * k + 1) / (brack_fact[n + k + 1] * brack_fact[n - k]);
        }

        RationalFn t = brack_fact[N + n] / (brack_fact[N - n - 1] * brack_fact[2 * n + 1]);
        t *= cprime;
        RationalFn mid(curly_fact[2 * n + 1] * curly_fact[n], curly(1));
        if (n % 2 == 1) mid = -mid;
        for (int k = 0; k < 2 * n; ++k) mid /= aunit;
        t *= mid;
        t *= inner;
        total += t;
    }
    total *= RationalFn(LaurentPoly::monomial(2 * static_cast<Exp>(p) * (1 - static_cast<Exp>(N) * N)));
    total /= brack(N);
    if (!total.is_polynomial())
        throw std::domain_error("walsh_colored_jones: non-unit denominator after reduction");
    return total.as_laurent().halve_exponents();
}

LaurentPoly habiro_left_torus_check(int p, int N) {
    require(p >= 1, "habiro check requires p >= 1");
    require(N >= 1, "habiro check requires N >= 1");
    LaurentPoly acc;
    for (int n = 0; n <= N - 1; ++n) {
        // C_n(K_(1,-p)): chain sum over n+1 = k_p >= ... >= k_1 >= 1.
        LaurentPoly cn;
        std::vector<int> k(p, 0);
        k[p - 1] = n + 1;
        std::vector<int> prefix(std::max(p - 1, 1), 0);
        bool more = true;
        while (more) {
            for (int i = 0; i + 1 < p; ++i) k[i] = prefix[i] + 1;
            Exp e = 0;
            LaurentPoly f = LaurentPoly::one();
            long long below = 0;  // 2 * sum_{j<i} k_j
            for (int i = 0; i + 1 < p; ++i) {
                e += static_cast<Exp>(k[i]) * k[i];
                f *= qbinomial(static_cast<int>(k[i + 1] + k[i] - (i + 1) + below),
                               k[i + 1] - k[i]);
                below += 2 * k[i];
            }
            cn.add_shifted(f, e, +1);
            more = p > 1 && MultiIndexRange::next(prefix, n);
        }
        cn.mul_monomial(static_cast<Exp>(n) + 1 - p, Int(1));
        acc += qpochhammer(1 + N, n) * qpochhammer(1 - N, n) * cn;
    }
    return acc;
}

}  // namespace dtj
