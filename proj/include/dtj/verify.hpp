#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dtj {

struct CheckResult {
    std::string name;
    std::string params;
    bool pass = false;
    double millis = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Optional caps on the native per-check grids, parsed from "m,p,N".
struct GridBounds {
    int m_cap = 1 << 20;
    int p_cap = 1 << 20;
    int n_cap = 1 << 20;
};

GridBounds grid_from_string(const std::string& s);

/// Runs one of the suites {all, oracles, mirrors, kz, bailey, lemmas} over
/// its native verification grid, optionally capped. Every check is exact;
/// the report lists one line per parameter point.
VerifyReport run_verify_suite(const std::string& suite, const std::optional<GridBounds>& caps);

std::string report_to_json(const VerifyReport& report);

}  // namespace dtj
