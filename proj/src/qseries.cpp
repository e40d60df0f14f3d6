#include "dtj/qseries.hpp"

#include <mutex>
#include <numeric>

namespace dtj {

LaurentPoly qpochhammer(long c, int n) {
    if (n < 0) throw std::invalid_argument("qpochhammer: n must be nonnegative");
    LaurentPoly r = LaurentPoly::one();
    for (int k = 0; k < n; ++k) {
        LaurentPoly factor = LaurentPoly::one();
        factor -= LaurentPoly::monomial(c + k);
        r *= factor;
    }
    return r;
}

namespace {

std::mutex qbin_mutex;
std::vector<std::vector<LaurentPoly>> qbin_rows;  // qbin_rows[n][k], k <= n

void grow_qbin_rows_locked(int n) {
    while (static_cast<int>(qbin_rows.size()) <= n) {
        int r = static_cast<int>(qbin_rows.size());
        std::vector<LaurentPoly> row(r + 1);
        row[0] = LaurentPoly::one();
        row[r] = LaurentPoly::one();
        for (int k = 1; k < r; ++k) {
            row[k] = qbin_rows[r - 1][k];
            row[k].add_shifted(qbin_rows[r - 1][k - 1], r - k, +1);
        }
        qbin_rows.push_back(std::move(row));
    }
}

}  // namespace

LaurentPoly qbinomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("qbinomial: n must be nonnegative");
    if (k < 0 || k > n) return {};
    std::lock_guard<std::mutex> lock(qbin_mutex);
    grow_qbin_rows_locked(n);
    return qbin_rows[n][k];
}

QBinomialTable::QBinomialTable(int max_n) {
    rows_.resize(max_n + 1);
    std::lock_guard<std::mutex> lock(qbin_mutex);
    grow_qbin_rows_locked(max_n);
    for (int n = 0; n <= max_n; ++n) rows_[n] = qbin_rows[n];
}

LaurentPoly qmultinomial(int n, const std::vector<int>& parts) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("qmultinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("qmultinomial: parts must sum to n");
    LaurentPoly r = LaurentPoly::one();
    int acc = 0;
    for (int p : parts) {
        acc += p;
        r *= qbinomial(acc, p);
    }
    return r;
}

}  // namespace dtj
