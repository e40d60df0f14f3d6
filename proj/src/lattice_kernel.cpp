#include "dtj/lattice_kernel.hpp"

#include "dtj/multi_index.hpp"
#include "dtj/qseries.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dtj {

LatticeSummand::LatticeSummand(int K, int V)
    : num_indices(K),
      max_value(V),
      coupling(K, std::vector<int>(K, 0)),
      index_exponent(K, std::vector<Exp>(V + 1, 0)),
      sign_weight(K, 0),
      top_factor(V + 1) {}

namespace {

void accumulate_point(const LatticeSummand& s, const QBinomialTable& binom,
                      const std::vector<int>& n, LaurentPoly& acc) {
    const int K = s.num_indices;
    Exp e = s.const_exponent;
    long long parity = 0;
    for (int i = 0; i < K; ++i) {
        if (n[i] == 0) continue;
        e += s.index_exponent[i][n[i]];
        parity += static_cast<long long>(s.sign_weight[i]) * n[i];
        for (int j = i + 1; j < K; ++j)
            e += static_cast<Exp>(s.coupling[i][j]) * n[i] * n[j];
    }
    // Builders keep index_exponent[i][0] = 0, so indices at 0 contribute
    // nothing to exponent, parity or coupling and are skipped above.
    LaurentPoly term = s.top_factor[n[K - 1]];
    for (int i = 0; i + 1 < K; ++i) {
        if (n[i] != 0 && n[i] != n[i + 1]) term *= binom(n[i + 1], n[i]);
    }
    acc.add_shifted(term, e, parity % 2 == 0 ? 1 : -1);
}

}  // namespace

LaurentPoly lattice_sum_serial(const LatticeSummand& s) {
    const QBinomialTable binom(s.max_value);
    std::vector<int> n(s.num_indices, 0);
    LaurentPoly acc;
    do {
        accumulate_point(s, binom, n, acc);
    } while (MultiIndexRange::next(n, s.max_value));
    return acc;
}

LaurentPoly lattice_sum(const LatticeSummand& s) {
#ifndef _OPENMP
    return lattice_sum_serial(s);
#else
    const QBinomialTable binom(s.max_value);
    const MultiIndexRange range(s.num_indices, s.max_value);
    const std::uint64_t total = range.count();
    // Small dynamically scheduled chunks: term cost grows with the top index,
    // so a plain even split would leave one thread with the expensive tail.
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
            std::vector<int> n = range.unrank(lo);
            for (std::uint64_t r = lo; r < hi; ++r) {
                accumulate_point(s, binom, n, local);
                MultiIndexRange::next(n, s.max_value);
            }
        }
#pragma omp critical
        acc += local;
    }
    return acc;
#endif
}

}  // namespace dtj
