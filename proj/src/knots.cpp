#include "dtj/knots.hpp"

#include <numeric>
#include <stdexcept>

namespace dtj {

KnotSpec mirror(const KnotSpec& k) { return KnotSpec{1 - k.m, -k.p}; }

std::string knot_name(const KnotSpec& k) {
    return "K(" + std::to_string(k.m) + "," + std::to_string(k.p) + ")";
}

TwoBridge::TwoBridge(int l_, int t_) : l(l_), t(t_) {
    if (l < 3 || t < 1 || l <= t) throw std::invalid_argument("TwoBridge: need l > t >= 1");
    if (l % 2 == 0 || t % 2 == 0) throw std::invalid_argument("TwoBridge: l and t must be odd");
    if (std::gcd(l, t) != 1) throw std::invalid_argument("TwoBridge: l and t must be coprime");
}

TwoBridge two_bridge_params(int m, int p, TwistFamily family) {
    if (m < 1 || p < 1) throw std::invalid_argument("two_bridge_params: m, p must be >= 1");
    if (family == TwistFamily::MinusMinus) return TwoBridge(4 * m * p + 2 * p - 1, 4 * m * p - 1);
    return TwoBridge(4 * m * p + 2 * p + 1, 4 * m * p + 1);
}

TakataTables takata_tables_general(const TwoBridge& tb) {
    const int l = tb.l, t = tb.t, pp = tb.pprime();
    TakataTables tab;
    tab.sigma.resize(pp);
    tab.rprime.resize(pp);
    tab.ik.assign(pp, 0);
    for (int j = 1; j <= pp; ++j) {
        const long prod = static_cast<long>(2 * j - 1) * t;
        long r = prod % (2 * l);
        if (r >= l) r -= 2 * l;  // representative in (-l, l); prod > 0 so r > -l
        tab.sigma[j - 1] = (prod / l) % 2 == 0 ? 1 : -1;
        const long rp = (std::abs(r) + 1) / 2;
        tab.rprime[j - 1] = static_cast<int>(rp);
        if (rp < 1 || rp > pp || tab.ik[rp - 1] != 0)
            throw std::invalid_argument("takata_tables_general: r' is not a bijection");
        tab.ik[rp - 1] = j;
    }
    tab.sigma_ik.resize(pp);
    for (int k = 1; k <= pp; ++k) tab.sigma_ik[k - 1] = tab.sigma[tab.ik[k - 1] - 1];
    return tab;
}

namespace {

// Interval decomposition shared by both lemma algorithms: interval number
// (1-based) and the i_k / sigma_{i_k} values on it.
int lemma_interval(int k, int p) { return (k - 1) / p + 1; }

}  // namespace

TakataTables takata_tables_lemma(int m, int p, TwistFamily family) {
    if (m < 1 || p < 1) throw std::invalid_argument("takata_tables_lemma: m, p must be >= 1");
    const int M = 2 * m + 1;
    const bool plus = family == TwistFamily::MinusPlus;
    const int pp = plus ? M * p : M * p - 1;
    // Base formulas on the first two intervals; later intervals shift by the
    // period step, down for odd interval numbers and up for even ones.
    const int step = plus ? 2 * M * p + 1 : 2 * M * p - 1;
    const int base1 = m + 1;                  // i_k = M(k-1) + base1 on interval 1
    const int base2 = plus ? m + 2 : m;       // i_k = M(2p-k) + base2 on interval 2

    TakataTables tab;
    tab.sigma.resize(pp);
    for (int j = 1; j <= pp; ++j) {
        const int r = j % M;
        if (plus)
            tab.sigma[j - 1] = (r >= 1 && r <= m + 1) ? 1 : -1;
        else
            tab.sigma[j - 1] = (r >= 1 && r <= m) ? 1 : -1;
    }
    tab.ik.resize(pp);
    tab.sigma_ik.resize(pp);
    for (int k = 1; k <= pp; ++k) {
        const int interval = lemma_interval(k, p);
        int ik;
        if (interval % 2 == 1)
            ik = M * (k - 1) + base1 - (interval - 1) / 2 * step;
        else
            ik = M * (2 * p - k) + base2 + (interval - 2) / 2 * step;
        tab.ik[k - 1] = ik;
        const int start = plus ? 1 : -1;  // sigma_{i_k} on interval 1
        tab.sigma_ik[k - 1] = interval % 2 == 1 ? start : -start;
    }
    tab.rprime.resize(pp);
    for (int k = 1; k <= pp; ++k) {
        const int j = tab.ik[k - 1];
        if (j < 1 || j > pp) throw std::logic_error("takata_tables_lemma: i_k out of range");
        tab.rprime[j - 1] = k;
    }
    return tab;
}

}  // namespace dtj
