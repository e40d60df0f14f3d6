// Acceptance suite: every cross-formula identity the library asserts, run
// over its full verification grid with exact equality, one line per
// criterion. Exit code 0 iff everything passes.

#include "dtj/cjp.hpp"
#include "dtj/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
    int number;
    std::string description;
    std::vector<std::string> prefixes;  // check-name prefixes drawn from the suites
};

bool starts_with_any(const std::string& name, const std::vector<std::string>& prefixes) {
    for (const auto& p : prefixes)
        if (name.rfind(p, 0) == 0) return true;
    return false;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;

    const std::vector<Criterion> criteria{
        {1, "normalization: J_1 = 1 and J_N(q=1) = 1", {"normalize_", "eval1_"}},
        {2, "theorem sums equal the two-bridge oracle (m,p<=2, N<=5)",
         {"thm1_eq_takata", "thm2_eq_takata"}},
        {3, "Habiro-type sums equal the raw Walsh formula (m,p<=3, N<=6)",
         {"thm3pos_eq_walsh", "thm3neg_eq_walsh"}},
        {4, "mirror closure under q -> 1/q (m<=2, p<=2, N<=5)", {"mirror_", "thm2_m0_eq_torus"}},
        {5, "classical torus anchor values", {"anchor_"}},
        {6, "index-table lemmas and the closed N-coefficient", {"lemma_", "a_closed_form_m2", "rprime_inverts_ik"}},
        {7, "root-of-unity relations and both dualities (all d | N, N<=8)", {"kz_"}},
        {8, "Bailey pairs: base, iterated chain, chain-sum betas",
         {"bailey_", "c_poly_defining", "d_poly_defining", "c_neg_poly_transform"}},
        {9, "cyclotomic-coefficient reassembly for K_(1,-p) (p<=3, N<=6)", {"habiro_eq_thm3neg"}},
    };

    const auto t0 = clock::now();
    const dtj::VerifyReport report = dtj::run_verify_suite("all", std::nullopt);

    bool all_pass = true;
    for (const auto& crit : criteria) {
        int total = 0, failed = 0;
        double ms = 0;
        for (const auto& c : report.checks) {
            if (!starts_with_any(c.name, crit.prefixes)) continue;
            ++total;
            ms += c.millis;
            if (!c.pass) ++failed;
        }
        const bool pass = total > 0 && failed == 0;
        all_pass = all_pass && pass;
        std::printf("criterion %2d: %s  [%d checks, %.0f ms] -- %s\n", crit.number,
                    pass ? "PASS" : "FAIL", total, ms, crit.description.c_str());
        if (failed > 0)
            for (const auto& c : report.checks)
                if (!c.pass && starts_with_any(c.name, crit.prefixes))
                    std::printf("    failed: %s %s\n", c.name.c_str(), c.params.c_str());
    }

    // Criterion 10: the largest oracle grid point must stay comfortably
    // inside a minute of wall time.
    {
        const auto p0 = clock::now();
        const dtj::LaurentPoly v = dtj::jones_thm1(2, 2, 4);
        const double secs = std::chrono::duration<double>(clock::now() - p0).count();
        const bool pass = secs < 60.0 && !v.is_zero();
        all_pass = all_pass && pass;
        std::printf("criterion 10: %s  [thm1(2,2,4) in %.2f s, budget 60 s]\n",
                    pass ? "PASS" : "FAIL", secs);
    }

    // Account for any suite checks not claimed by a numbered criterion.
    {
        int unclaimed = 0, unclaimed_failed = 0;
        for (const auto& c : report.checks) {
            bool claimed = false;
            for (const auto& crit : criteria) claimed = claimed || starts_with_any(c.name, crit.prefixes);
            if (!claimed) {
                ++unclaimed;
                if (!c.pass) ++unclaimed_failed;
            }
        }
        if (unclaimed > 0) {
            const bool pass = unclaimed_failed == 0;
            all_pass = all_pass && pass;
            std::printf("supporting checks: %s  [%d checks]\n", pass ? "PASS" : "FAIL", unclaimed);
        }
    }

    const double total_s = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("overall: %s  [%zu checks, %.1f s]\n", all_pass ? "PASS" : "FAIL",
                report.checks.size(), total_s);
    return all_pass ? 0 : 1;
}
