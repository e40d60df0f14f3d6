// dtj: exact colored Jones polynomials of double twist knots, the attached
// Kontsevich-Zagier type series at roots of unity, and the cross-formula
// verification suites.
//
// Subcommands: jones, compare, kz, bailey, verify.
// Exit codes: 0 success, 1 verification failure/mismatch, 2 usage error.

#include "dtj/bailey.hpp"
#include "dtj/cjp.hpp"
#include "dtj/knots.hpp"
#include "dtj/kzseries.hpp"
#include "dtj/poly_io.hpp"
#include "dtj/takata.hpp"
#include "dtj/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

namespace {

using namespace dtj;

struct FamilySpec {
    std::string name;   // thm1, thm2, thm3pos, thm3neg, torus, walsh, takata
    bool inverted = false;  // "<family>~invert": mirror knot via q -> 1/q at m+1
    int m_min = 0;
    std::function<LaurentPoly(int, int, int)> eval;
};

FamilySpec parse_family(std::string spec) {
    for (const char* suffix : {"~invert", "∘invert"}) {
        const std::string s(suffix);
        if (spec.size() > s.size() && spec.compare(spec.size() - s.size(), s.size(), s) == 0) {
            FamilySpec inner = parse_family(spec.substr(0, spec.size() - s.size()));
            if (inner.name != "thm3pos" && inner.name != "thm3neg")
                throw CLI::ValidationError("~invert is defined for thm3pos/thm3neg only");
            FamilySpec out;
            out.name = inner.name + "~invert";
            out.inverted = true;
            out.m_min = inner.m_min - 1;
            out.eval = [inner](int m, int p, int N) {
                return lp_invert_q(inner.eval(m + 1, p, N));
            };
            return out;
        }
    }
    FamilySpec f;
    f.name = spec;
    if (spec == "thm1") {
        f.m_min = 1;
        f.eval = [](int m, int p, int N) { return jones_thm1(m, p, N); };
    } else if (spec == "thm2") {
        f.m_min = 0;
        f.eval = [](int m, int p, int N) { return jones_thm2(m, p, N); };
    } else if (spec == "thm3pos") {
        f.m_min = 1;
        f.eval = [](int m, int p, int N) { return jones_thm3_pos(m, p, N); };
    } else if (spec == "thm3neg") {
        f.m_min = 1;
        f.eval = [](int m, int p, int N) { return jones_thm3_neg(m, p, N); };
    } else if (spec == "torus") {
        f.m_min = 0;
        f.eval = [](int, int p, int N) { return jones_torus(p, N); };
    } else if (spec == "walsh") {
        f.m_min = 1;
        f.eval = [](int m, int p, int N) { return walsh_colored_jones(m, p, N); };
    } else if (spec == "takata" || spec == "takata-mm") {
        // Same knot as thm1: b(4mp+2p-1, 4mp-1)* = K_(-m,-p).
        f.m_min = 1;
        f.eval = [](int m, int p, int N) {
            return takata_colored_jones(two_bridge_params(m, p, TwistFamily::MinusMinus), N);
        };
    } else if (spec == "takata-mp") {
        // Same knot as thm2: b(4mp+2p+1, 4mp+1)* = K_(-m,p).
        f.m_min = 1;
        f.eval = [](int m, int p, int N) {
            return takata_colored_jones(two_bridge_params(m, p, TwistFamily::MinusPlus), N);
        };
    } else {
        throw CLI::ValidationError("unknown family: " + spec);
    }
    return f;
}

std::optional<GridBounds> resolve_grid(const std::string& flag_value) {
    if (!flag_value.empty()) return grid_from_string(flag_value);
    if (const char* env = std::getenv("DTJ_GRID")) return grid_from_string(env);
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact colored Jones polynomials of double twist knots"};
    app.require_subcommand(1);

    // -------- jones --------
    auto* jones = app.add_subcommand("jones", "Evaluate one colored Jones polynomial");
    std::string jones_family;
    int jm = 1, jp = 1, jN = 1, jl = 0, jt = 0;
    std::string jones_format = "text";
    jones->add_option("--family", jones_family, "thm1|thm2|thm3pos|thm3neg|torus|walsh|takata")
        ->required();
    jones->add_option("-m", jm, "twist parameter m");
    jones->add_option("-p", jp, "twist parameter p (nonzero; walsh accepts p < 0)");
    jones->add_option("-N", jN, "color (dimension), N >= 1")->required();
    jones->add_option("--l", jl, "two-bridge l (takata family only)");
    jones->add_option("--t", jt, "two-bridge t (takata family only)");
    jones->add_option("--format", jones_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // -------- compare --------
    auto* compare = app.add_subcommand("compare", "Compare two families over a parameter grid");
    std::string fam_a, fam_b, compare_grid = "2,2,4";
    compare->add_option("familyA", fam_a, "first family spec (suffix ~invert composes the mirror)")
        ->required();
    compare->add_option("familyB", fam_b, "second family spec")->required();
    compare->add_option("--grid", compare_grid, "bounds \"mMax,pMax,NMax\"");

    // -------- kz --------
    auto* kz = app.add_subcommand("kz", "Kontsevich-Zagier type series at roots of unity");
    std::string kz_series;
    int km = 0, kp = 1, kN = 1, kdiv = 0, kcheck = 0;
    kz->add_option("--series", kz_series, "F|Ffrak|U|Ufrak");
    kz->add_option("--check-duality", kcheck, "1 or 2: verify the duality at (m,p,N)")
        ->check(CLI::IsMember({1, 2}));
    kz->add_option("-m", km, "series parameter m");
    kz->add_option("-p", kp, "series parameter p");
    kz->add_option("-N", kN, "root-of-unity order")->required();
    kz->add_option("--divisor", kdiv, "evaluate at the primitive d-th root for d | N");

    // -------- bailey --------
    auto* bailey = app.add_subcommand("bailey", "Verify Bailey pairs and iterated chains");
    std::string pair_name = "slater";
    int iterate = 1, check_n = 8;
    bailey->add_option("--pair", pair_name, "slater|walsh")
        ->check(CLI::IsMember({"slater", "walsh"}));
    bailey->add_option("--iterate", iterate, "number of chain iterations P (P-1 steps)");
    bailey->add_option("--check-n", check_n, "verify the defining relation up to this index");

    // -------- verify --------
    auto* verify = app.add_subcommand("verify", "Run a verification suite, emit a JSON report");
    std::string suite = "all", verify_grid;
    verify->add_option("--suite", suite, "all|oracles|mirrors|kz|bailey|lemmas");
    verify->add_option("--grid", verify_grid, "caps \"m,p,N\" (also env DTJ_GRID)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*jones) {
            LaurentPoly value;
            if (jones_family == "takata" && (jl != 0 || jt != 0)) {
                value = takata_colored_jones(TwoBridge(jl, jt), jN);
            } else {
                const FamilySpec f = parse_family(jones_family);
                value = f.eval(jm, jp, jN);
            }
            std::cout << (jones_format == "json" ? to_json(value) : to_text(value)) << "\n";
            return 0;
        }
        if (*compare) {
            const FamilySpec fa = parse_family(fam_a);
            const FamilySpec fb = parse_family(fam_b);
            const GridBounds g = grid_from_string(compare_grid);
            const int m_lo = std::max({fa.m_min, fb.m_min, 0});
            for (int m = m_lo; m <= g.m_cap; ++m)
                for (int p = 1; p <= g.p_cap; ++p)
                    for (int N = 1; N <= g.n_cap; ++N) {
                        const LaurentPoly a = fa.eval(m, p, N);
                        const LaurentPoly b = fb.eval(m, p, N);
                        if (!(a == b)) {
                            std::cout << "mismatch at m=" << m << " p=" << p << " N=" << N << "\n"
                                      << fa.name << ": " << to_text(a) << "\n"
                                      << fb.name << ": " << to_text(b) << "\n";
                            return 1;
                        }
                    }
            std::cout << "all grid points agree\n";
            return 0;
        }
        if (*kz) {
            if (kcheck != 0) {
                const bool ok = kcheck == 1 ? check_duality_1(km, kp, kN)
                                            : check_duality_2(km, kp, kN);
                std::cout << (ok ? "duality holds\n" : "duality FAILS\n");
                return ok ? 0 : 1;
            }
            if (kz_series.empty())
                throw CLI::ValidationError("kz: need --series or --check-duality");
            const int level = kdiv != 0 ? kdiv : kN;
            if (kdiv != 0 && kN % kdiv != 0)
                throw CLI::ValidationError("kz: --divisor must divide N");
            LaurentPoly trunc;
            if (kz_series == "F")
                trunc = F_series_truncated(km, kp, kN);
            else if (kz_series == "Ffrak")
                trunc = Ffrak_series_truncated(km, kp, kN);
            else if (kz_series == "U")
                trunc = U_series_truncated(km, kp, kN);
            else if (kz_series == "Ufrak")
                trunc = Ufrak_series_truncated_at_level(km, kp, kN);
            else
                throw CLI::ValidationError("kz: unknown series " + kz_series);
            std::cout << to_json(reduce_mod_phi(trunc, level)) << "\n";
            return 0;
        }
        if (*bailey) {
            BaileyPair base = pair_name == "slater" ? base_pair_slater() : base_pair_walsh();
            if (!verify_bailey_pair(base, check_n)) {
                std::cout << "base pair " << pair_name << " FAILS up to n=" << check_n << "\n";
                return 1;
            }
            std::cout << "base pair " << pair_name << " verified to n=" << check_n << "\n";
            if (iterate > 1) {
                BaileyPair iter = base;
                for (int i = 1; i < iterate; ++i) iter = bailey_step_limit(iter);
                const BaileyPair closed = pair_name == "slater" ? iterated_pair_slater(iterate)
                                                                : iterated_pair_walsh(iterate);
                for (int n = 0; n <= check_n; ++n) {
                    if (!(iter.alpha(n) == closed.alpha(n)) || !(iter.beta(n) == closed.beta(n))) {
                        std::cout << "iterated pair differs from closed form at n=" << n << "\n";
                        return 1;
                    }
                }
                if (!verify_bailey_pair(closed, check_n)) {
                    std::cout << "closed-form pair FAILS up to n=" << check_n << "\n";
                    return 1;
                }
                std::cout << "iterated pair (P=" << iterate
                          << ") matches closed form and verifies to n=" << check_n << "\n";
            }
            return 0;
        }
        if (*verify) {
            const VerifyReport report = run_verify_suite(suite, resolve_grid(verify_grid));
            std::cout << report_to_json(report) << "\n";
            return report.all_pass() ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
