#include "dtj/takata.hpp"

#include "dtj/multi_index.hpp"
#include "dtj/qseries.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

namespace dtj {

namespace {

inline int at(const std::vector<int>& nbar, int j) { return j >= 1 ? nbar[j - 1] : 0; }

inline long long tri(long long d) { return d * (d + 1) / 2; }

}  // namespace

long long takata_a(const TakataTables& tab, const std::vector<int>& nbar) {
    const int pp = static_cast<int>(tab.sigma.size());
    // Suffix sums of (sigma_{i_k} + sigma_{i_{pp+1-k}})/2; each pair sum is
    // in {-2,0,2}, so the halves are integers.
    std::vector<long long> half_suffix(pp + 2, 0);
    for (int k = pp; k >= 1; --k)
        half_suffix[k] =
            half_suffix[k + 1] + (tab.sigma_ik[k - 1] + tab.sigma_ik[pp - k]) / 2;
    long long a = 0;
    for (int j = 1; j <= pp; ++j) a -= half_suffix[tab.rprime[j - 1]] * (at(nbar, j) - at(nbar, j - 1));
    for (int j = 1; j <= pp - 1; ++j) a -= (tab.sigma[j] + tab.sigma[pp - j]) / 2 * at(nbar, j);
    a -= (tab.sigma[pp - 1] + 1) / 2 * at(nbar, pp);
    for (int j = 1; j <= pp; ++j) a -= tab.sigma[j - 1];
    return a;
}

long long takata_b1(const TwoBridge& tb, const TakataTables& tab, const std::vector<int>& nbar) {
    const int pp = tb.pprime();
    const int half_lt = (tb.l - tb.t) / 2;
    long long b = -takata_a(tab, nbar);
    for (int k = 1; k <= half_lt; ++k)
        b += (1 - tab.sigma_ik[k - 1]) / 2 * at(nbar, tab.ik[k - 1] - 1);
    for (int k = half_lt + 1; k <= pp; ++k) b -= at(nbar, tab.ik[k - 1] - 1);
    for (int k = half_lt + 1; k <= pp; ++k)
        b += (1 + tab.sigma_ik[k - 1]) / 2 * at(nbar, tab.ik[k - 1]);
    b -= static_cast<long long>(1 + tab.sigma[pp - 1]) * at(nbar, pp);
    for (int j = 1; j <= pp - 1; ++j) b += (tab.sigma[j] - tab.sigma[j - 1]) / 2 * at(nbar, j);

    std::vector<long long> diff(pp + 1, 0);  // D_k = n_{i_k} - n_{i_k - 1}
    for (int k = 1; k <= pp; ++k)
        diff[k] = at(nbar, tab.ik[k - 1]) - at(nbar, tab.ik[k - 1] - 1);
    for (int k = 1; k <= pp - 1; ++k) {
        if (diff[k] == 0) continue;
        for (int kp = k + 1; kp <= pp; ++kp) {
            const int sgn = tab.ik[k - 1] > tab.ik[kp - 1] ? 1 : -1;
            if (sgn < 0) continue;  // (1 + sgn)/2 = 0
            b -= (tab.sigma_ik[k - 1] - tab.sigma_ik[kp - 1]) / 2 * diff[k] * diff[kp];
        }
    }
    std::vector<long long> prefix_diff(pp + 1, 0);
    for (int k = 1; k <= pp; ++k) prefix_diff[k] = prefix_diff[k - 1] + diff[k];
    for (int j = 1; j <= pp; ++j)
        b += tab.sigma[j - 1] * prefix_diff[tab.rprime[j - 1]] * at(nbar, j - 1);
    return b;
}

long long takata_b2(const TwoBridge& tb, const TakataTables& tab, const std::vector<int>& nbar) {
    const int l = tb.l, t = tb.t;
    long long b = 0;
    if (l < 2 * t) {
        for (int k = (l - t) / 2 + 1; k <= (t - 1) / 2; ++k)
            b += (1 + tab.sigma_ik[k - 1]) / 2 * at(nbar, tab.ik[k - 1] - 1);
    } else {
        for (int k = (t + 1) / 2 + 1; k <= (l - t) / 2; ++k)
            b -= (1 + tab.sigma_ik[k - 1]) / 2 * at(nbar, tab.ik[k - 1] - 1);
    }
    return b;
}

long long takata_a_closed_m2(int p, const std::vector<int>& nbar) {
    if (p < 1) throw std::invalid_argument("takata_a_closed_m2: p must be >= 1");
    if (static_cast<int>(nbar.size()) != 5 * p)
        throw std::invalid_argument("takata_a_closed_m2: nbar must have length 5p");
    // The suffix sums of the sign pairs telescope: the (p-j) weights on the
    // n_{5j} and n_{5j-5} blocks cancel and only -n_{5j-2} survives per
    // period, plus the boundary -n_{5j} terms and the constant.
    long long a = -p;
    for (int j = 1; j <= p; ++j) a -= nbar[5 * j - 3];
    for (int j = 1; j <= p - 1; ++j) a -= nbar[5 * j - 1];
    return a;
}

namespace {

struct TakataEval {
    TwoBridge tb;
    TakataTables tab;
    int N;
    QBinomialTable binom;
    std::vector<LaurentPoly> top;  // (q^{N-v};q)_v for v = 0..N-1

    TakataEval(const TwoBridge& tb_, int N_)
        : tb(tb_), tab(takata_tables_general(tb_)), N(N_), binom(N_ - 1) {
        top.reserve(N);
        for (int v = 0; v < N; ++v) top.push_back(qpochhammer(N - v, v));
    }

    void accumulate(LaurentPoly& acc, const std::vector<int>& nbar) const {
        const int pp = tb.pprime();
        long long e = takata_a(tab, nbar) * N + takata_b1(tb, tab, nbar) + takata_b2(tb, tab, nbar);
        const int ntop = nbar[pp - 1];
        int parity = ntop;
        if (tab.sigma[pp - 1] == -1) e -= static_cast<long long>(N) * ntop;  // kappa
        LaurentPoly term = top[ntop];
        for (int j = 1; j <= pp; ++j) {
            const int d = at(nbar, j) - at(nbar, j - 1);
            if (tab.sigma[j - 1] == 1)
                e += tri(d);
            else
                parity += d;
            if (d != 0 && d != at(nbar, j)) term *= binom(at(nbar, j), d);
        }
        acc.add_shifted(term, e, parity % 2 == 0 ? 1 : -1);
    }
};

}  // namespace

LaurentPoly takata_colored_jones_serial(const TwoBridge& tb, int N) {
    if (N < 1) throw std::invalid_argument("takata_colored_jones: N must be >= 1");
    const TakataEval ev(tb, N);
    std::vector<int> nbar(tb.pprime(), 0);
    LaurentPoly acc;
    do {
        ev.accumulate(acc, nbar);
    } while (MultiIndexRange::next(nbar, N - 1));
    return acc;
}

LaurentPoly takata_colored_jones(const TwoBridge& tb, int N) {
    if (N < 1) throw std::invalid_argument("takata_colored_jones: N must be >= 1");
#ifndef _OPENMP
    return takata_colored_jones_serial(tb, N);
#else
    const TakataEval ev(tb, N);
    const MultiIndexRange range(tb.pprime(), N - 1);
    const std::uint64_t total = range.count();
    const long long nchunks =
        static_cast<long long>(std::min<std::uint64_t>(total, 16 * omp_get_max_threads()));
    LaurentPoly acc;
#pragma omp parallel
    {
        LaurentPoly local;
#pragma omp for schedule(dynamic, 1)
        for (long long chunk = 0; chunk < nchunks; ++chunk) {
            const std::uint64_t lo = total * chunk / nchunks;
            const std::uint64_t hi = total * (chunk + 1) / nchunks;
            if (lo >= hi) continue;
            std::vector<int> nbar = range.unrank(lo);
            for (std::uint64_t r = lo; r < hi; ++r) {
                ev.accumulate(local, nbar);
                MultiIndexRange::next(nbar, N - 1);
            }
        }
#pragma omp critical
        acc += local;
    }
    return acc;
#endif
}

}  // namespace dtj
