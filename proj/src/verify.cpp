#include "dtj/verify.hpp"

#include "dtj/bailey.hpp"
#include "dtj/cjp.hpp"
#include "dtj/knots.hpp"
#include "dtj/kzseries.hpp"
#include "dtj/poly_io.hpp"
#include "dtj/qseries.hpp"
#include "dtj/takata.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace dtj {

GridBounds grid_from_string(const std::string& s) {
    GridBounds g;
    std::istringstream in(s);
    char c1 = 0, c2 = 0;
    if (!(in >> g.m_cap >> c1 >> g.p_cap >> c2 >> g.n_cap) || c1 != ',' || c2 != ',')
        throw std::invalid_argument("grid bounds must look like \"m,p,N\"");
    if (g.m_cap < 0 || g.p_cap < 1 || g.n_cap < 1)
        throw std::invalid_argument("grid bounds out of range");
    return g;
}

namespace {

struct Runner {
    std::vector<CheckResult>& out;
    GridBounds caps;

    int m(int native) const { return std::min(native, caps.m_cap); }
    int p(int native) const { return std::min(native, caps.p_cap); }
    int N(int native) const { return std::min(native, caps.n_cap); }

    void check(const std::string& name, const std::string& params,
               const std::function<bool()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception&) {
            ok = false;
        }
        const auto t1 = std::chrono::steady_clock::now();
        out.push_back({name, params,
                       ok, std::chrono::duration<double, std::milli>(t1 - t0).count()});
    }
};

std::string pt(int m, int p, int N) {
    return "m=" + std::to_string(m) + " p=" + std::to_string(p) + " N=" + std::to_string(N);
}

std::string pt(int m, int p) {
    return "m=" + std::to_string(m) + " p=" + std::to_string(p);
}

LaurentPoly anchor_poly_trefoil() {
    // q^-1 + q^-3 - q^-4
    LaurentPoly f = LaurentPoly::monomial(-1);
    f += LaurentPoly::monomial(-3);
    f -= LaurentPoly::monomial(-4);
    return f;
}

LaurentPoly anchor_poly_cinquefoil() {
    // q^-2 + q^-4 - q^-5 + q^-6 - q^-7
    LaurentPoly f = LaurentPoly::monomial(-2);
    f += LaurentPoly::monomial(-4);
    f -= LaurentPoly::monomial(-5);
    f += LaurentPoly::monomial(-6);
    f -= LaurentPoly::monomial(-7);
    return f;
}

void suite_normalization(Runner& r) {
    for (int m = 1; m <= r.m(2); ++m)
        for (int p = 1; p <= r.p(2); ++p) {
            r.check("normalize_thm1_N1", pt(m, p, 1), [=] { return jones_thm1(m, p, 1).is_one(); });
            r.check("normalize_thm2_N1", pt(m, p, 1), [=] { return jones_thm2(m, p, 1).is_one(); });
            r.check("normalize_thm3pos_N1", pt(m, p, 1),
                    [=] { return jones_thm3_pos(m, p, 1).is_one(); });
            r.check("normalize_thm3neg_N1", pt(m, p, 1),
                    [=] { return jones_thm3_neg(m, p, 1).is_one(); });
            r.check("normalize_walsh_N1", pt(m, p, 1),
                    [=] { return walsh_colored_jones(m, p, 1).is_one(); });
            for (auto family : {TwistFamily::MinusMinus, TwistFamily::MinusPlus})
                r.check("normalize_takata_N1", pt(m, p, 1), [=] {
                    return takata_colored_jones(two_bridge_params(m, p, family), 1).is_one();
                });
            for (int N = 2; N <= r.N(5); ++N) {
                r.check("eval1_thm1", pt(m, p, N),
                        [=] { return jones_thm1(m, p, N).eval_at_one() == 1; });
                r.check("eval1_thm2", pt(m, p, N),
                        [=] { return jones_thm2(m, p, N).eval_at_one() == 1; });
                r.check("eval1_thm3pos", pt(m, p, N),
                        [=] { return jones_thm3_pos(m, p, N).eval_at_one() == 1; });
                r.check("eval1_thm3neg", pt(m, p, N),
                        [=] { return jones_thm3_neg(m, p, N).eval_at_one() == 1; });
                r.check("eval1_walsh", pt(m, p, N),
                        [=] { return walsh_colored_jones(m, p, N).eval_at_one() == 1 &&
                                     walsh_colored_jones(m, -p, N).eval_at_one() == 1; });
                r.check("eval1_takata", pt(m, p, N), [=] {
                    return takata_colored_jones(two_bridge_params(m, p, TwistFamily::MinusMinus), N)
                                   .eval_at_one() == 1 &&
                           takata_colored_jones(two_bridge_params(m, p, TwistFamily::MinusPlus), N)
                                   .eval_at_one() == 1;
                });
            }
        }
    for (int p = 1; p <= r.p(2); ++p) {
        r.check("normalize_torus_N1", pt(0, p, 1), [=] { return jones_torus(p, 1).is_one(); });
        r.check("normalize_thm2_m0_N1", pt(0, p, 1), [=] { return jones_thm2(0, p, 1).is_one(); });
        for (int N = 2; N <= r.N(5); ++N)
            r.check("eval1_torus", pt(0, p, N),
                    [=] { return jones_torus(p, N).eval_at_one() == 1; });
    }
}

void suite_oracles(Runner& r) {
    suite_normalization(r);
    for (int m = 1; m <= r.m(2); ++m)
        for (int p = 1; p <= r.p(2); ++p)
            for (int N = 1; N <= r.N(5); ++N) {
                r.check("thm1_eq_takata", pt(m, p, N), [=] {
                    return jones_thm1(m, p, N) ==
                           takata_colored_jones(two_bridge_params(m, p, TwistFamily::MinusMinus), N);
                });
                r.check("thm2_eq_takata", pt(m, p, N), [=] {
                    return jones_thm2(m, p, N) ==
                           takata_colored_jones(two_bridge_params(m, p, TwistFamily::MinusPlus), N);
                });
            }
    for (int m = 1; m <= r.m(3); ++m)
        for (int p = 1; p <= r.p(3); ++p)
            for (int N = 1; N <= r.N(6); ++N) {
                r.check("thm3pos_eq_walsh", pt(m, p, N),
                        [=] { return jones_thm3_pos(m, p, N) == walsh_colored_jones(m, p, N); });
                r.check("thm3neg_eq_walsh", pt(m, p, N),
                        [=] { return jones_thm3_neg(m, p, N) == walsh_colored_jones(m, -p, N); });
            }
    r.check("anchor_torus_1_2", "p=1 N=2", [] { return jones_torus(1, 2) == anchor_poly_trefoil(); });
    r.check("anchor_torus_2_2", "p=2 N=2",
            [] { return jones_torus(2, 2) == anchor_poly_cinquefoil(); });
    for (int p = 1; p <= r.p(3); ++p)
        for (int N = 1; N <= r.N(6); ++N)
            r.check("habiro_eq_thm3neg", pt(1, p, N),
                    [=] { return habiro_left_torus_check(p, N) == jones_thm3_neg(1, p, N); });
    for (int p = 1; p <= r.p(4); ++p)
        for (int n = 0; n <= std::min(10, r.caps.n_cap); ++n) {
            r.check("c_poly_defining_eq_closed", "p=" + std::to_string(p) + " n=" + std::to_string(n),
                    [=] { return c_poly_defining(p, n) == RationalFn(c_poly(p, n)); });
            r.check("d_poly_defining_eq_closed", "m=" + std::to_string(p) + " n=" + std::to_string(n),
                    [=] { return d_poly_defining(p, n) == d_poly(p, n); });
            r.check("c_neg_poly_transform", "p=" + std::to_string(p) + " n=" + std::to_string(n), [=] {
                LaurentPoly rhs = lp_invert_q(c_poly(p, n));
                rhs.mul_monomial(-static_cast<Exp>(n) * (n + 3) / 2, Int(n % 2 == 0 ? 1 : -1));
                return c_neg_poly(p, n) == rhs;
            });
        }
}

void suite_mirrors(Runner& r) {
    for (int m = 1; m <= r.m(2); ++m)
        for (int p = 1; p <= r.p(2); ++p)
            for (int N = 1; N <= r.N(5); ++N)
                r.check("mirror_thm3pos_eq_thm1", pt(m, p, N), [=] {
                    return lp_invert_q(jones_thm3_pos(m + 1, p, N)) == jones_thm1(m, p, N);
                });
    for (int m = 0; m <= r.m(2); ++m)
        for (int p = 1; p <= r.p(2); ++p)
            for (int N = 1; N <= r.N(5); ++N)
                r.check("mirror_thm3neg_eq_thm2", pt(m, p, N), [=] {
                    return lp_invert_q(jones_thm3_neg(m + 1, p, N)) == jones_thm2(m, p, N);
                });
    for (int p = 1; p <= r.p(2); ++p)
        for (int N = 1; N <= r.N(5); ++N)
            r.check("mirror_thm3neg_eq_torus", pt(0, p, N), [=] {
                return lp_invert_q(jones_thm3_neg(1, p, N)) == jones_torus(p, N);
            });
    for (int p = 1; p <= r.p(3); ++p)
        for (int N = 1; N <= r.N(6); ++N)
            r.check("thm2_m0_eq_torus", pt(0, p, N),
                    [=] { return jones_thm2(0, p, N) == jones_torus(p, N); });
}

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

void suite_kz(Runner& r) {
    for (int p = 1; p <= r.p(2); ++p)
        for (int N = 1; N <= r.N(8); ++N) {
            for (int m = 0; m <= r.m(2); ++m) {
                const LaurentPoly f = F_series_truncated(m, p, N);
                const LaurentPoly j2 = jones_thm2(m, p, N);
                for (int d : divisors(N))
                    r.check("kz_F_eq_thm2", pt(m, p, N) + " d=" + std::to_string(d),
                            [&] { return reduce_mod_phi(f, d) == reduce_mod_phi(j2, d); });
            }
            for (int m = 1; m <= r.m(2); ++m) {
                const LaurentPoly ff = Ffrak_series_truncated(m, p, N);
                const LaurentPoly j1 = jones_thm1(m, p, N);
                const LaurentPoly u = U_series_truncated(m, p, N);
                const LaurentPoly j3n = jones_thm3_neg(m, p, N);
                const LaurentPoly uf = Ufrak_series_truncated_at_level(m, p, N);
                const LaurentPoly j3p = jones_thm3_pos(m, p, N);
                for (int d : divisors(N)) {
                    r.check("kz_Ffrak_eq_thm1", pt(m, p, N) + " d=" + std::to_string(d),
                            [&] { return reduce_mod_phi(ff, d) == reduce_mod_phi(j1, d); });
                    r.check("kz_U_eq_thm3neg", pt(m, p, N) + " d=" + std::to_string(d),
                            [&] { return reduce_mod_phi(u, d) == reduce_mod_phi(j3n, d); });
                    r.check("kz_Ufrak_eq_thm3pos", pt(m, p, N) + " d=" + std::to_string(d),
                            [&] { return reduce_mod_phi(uf, d) == reduce_mod_phi(j3p, d); });
                }
            }
        }
    for (int p = 1; p <= r.p(2); ++p)
        for (int N = 1; N <= r.N(8); ++N) {
            for (int m = 0; m <= r.m(2); ++m) {
                const LaurentPoly f = F_series_truncated(m, p, N);
                const LaurentPoly u = U_series_truncated(m + 1, p, N);
                for (int d : divisors(N))
                    r.check("kz_duality_F_U", pt(m, p, N) + " d=" + std::to_string(d), [&] {
                        return reduce_mod_phi(f, d) == galois_invert(reduce_mod_phi(u, d));
                    });
            }
            for (int m = 1; m <= r.m(2); ++m) {
                const LaurentPoly ff = Ffrak_series_truncated(m, p, N);
                const LaurentPoly uf = Ufrak_series_truncated_at_level(m + 1, p, N);
                for (int d : divisors(N))
                    r.check("kz_duality_Ffrak_Ufrak", pt(m, p, N) + " d=" + std::to_string(d), [&] {
                        return reduce_mod_phi(ff, d) == galois_invert(reduce_mod_phi(uf, d));
                    });
            }
        }
    // The forced reading of the partner-series relation pairs Ufrak with
    // K_(m,p). The alternative pairing with K_(-m,p) fails somewhere on the
    // grid; this check documents that it is a genuine discrepancy and not an
    // equivalent convention.
    r.check("kz_papertext_variant_differs", "grid m,p<=2 N<=6", [&] {
        for (int m = 1; m <= r.m(2); ++m)
            for (int p = 1; p <= r.p(2); ++p)
                for (int N = 1; N <= r.N(6); ++N)
                    if (!(Ufrak_at_root(m, p, N) == reduce_mod_phi(jones_thm2(m, p, N), N)))
                        return true;
        return false;
    });
}

void suite_bailey(Runner& r) {
    r.check("bailey_base_slater", "n<=10",
            [&] { return verify_bailey_pair(base_pair_slater(), std::min(10, r.caps.n_cap * 2)); });
    r.check("bailey_base_walsh", "n<=10",
            [&] { return verify_bailey_pair(base_pair_walsh(), std::min(10, r.caps.n_cap * 2)); });
    r.check("bailey_perturbed_fails", "n<=2", [] {
        BaileyPair broken = base_pair_slater();
        broken.beta = [](int n) { return RationalFn(LaurentPoly::one(), qpochhammer(1, n + 1)); };
        return !verify_bailey_pair(broken, 2);
    });
    const int nmax = std::min(8, r.caps.n_cap);
    for (int p = 1; p <= r.p(4); ++p) {
        for (auto base : {base_pair_slater(), base_pair_walsh()}) {
            BaileyPair iter = base;
            for (int i = 1; i < p; ++i) iter = bailey_step_limit(iter);
            const BaileyPair closed =
                base.name == "slater" ? iterated_pair_slater(p) : iterated_pair_walsh(p);
            r.check("bailey_iterate_matches_closed_" + base.name, "p=" + std::to_string(p), [&] {
                for (int n = 0; n <= nmax; ++n) {
                    if (!(iter.alpha(n) == closed.alpha(n))) return false;
                    if (!(iter.beta(n) == closed.beta(n))) return false;
                }
                return true;
            });
            r.check("bailey_closed_verifies_" + base.name, "p=" + std::to_string(p),
                    [&] { return verify_bailey_pair(closed, nmax); });
        }
        r.check("bailey_beta_eq_c_poly", "p=" + std::to_string(p), [&] {
            for (int n = 0; n <= nmax; ++n)
                if (!(iterated_pair_slater(p).beta(n) * RationalFn(qpochhammer(1, n)) ==
                      RationalFn(c_poly(p, n))))
                    return false;
            return true;
        });
        r.check("bailey_beta_eq_d_poly", "p=" + std::to_string(p), [&] {
            for (int n = 0; n <= nmax; ++n)
                if (!(iterated_pair_walsh(p).beta(n) * RationalFn(qpochhammer(1, n)) == d_poly(p, n)))
                    return false;
            return true;
        });
    }
    // The displayed finite-rho lemma, at concrete rho specialisations.
    const RationalFn rho_a{LaurentPoly::monomial(-1)};
    const RationalFn rho_b{LaurentPoly::monomial(-2)};
    const RationalFn rho_c{LaurentPoly(2)};
    r.check("bailey_finite_rho_step", "rho=(q^-1,q^-2),(q^-1,2); n<=4", [&] {
        return verify_bailey_pair(bailey_step_finite(base_pair_slater(), rho_a, rho_b), 4) &&
               verify_bailey_pair(bailey_step_finite(base_pair_walsh(), rho_a, rho_c), 4);
    });
}

void suite_lemmas(Runner& r) {
    std::mt19937 rng(20260810);
    for (int m = 1; m <= r.m(4); ++m)
        for (int p = 1; p <= r.p(4); ++p)
            for (auto family : {TwistFamily::MinusMinus, TwistFamily::MinusPlus}) {
                const char* fam = family == TwistFamily::MinusMinus ? "mm" : "mp";
                r.check(std::string("lemma_tables_eq_general_") + fam, pt(m, p), [&] {
                    return takata_tables_lemma(m, p, family) ==
                           takata_tables_general(two_bridge_params(m, p, family));
                });
                r.check(std::string("lemma_sum_patterns_") + fam, pt(m, p), [&] {
                    const TakataTables tab =
                        takata_tables_general(two_bridge_params(m, p, family));
                    const int pp = static_cast<int>(tab.sigma.size());
                    const int M = 2 * m + 1;
                    for (int k = 1; k <= pp; ++k) {
                        const int s = tab.sigma_ik[k - 1] + tab.sigma_ik[pp - k];
                        const int interval = (k - 1) / p;  // 0-based
                        int expect;
                        if (family == TwistFamily::MinusPlus)
                            expect = interval % 2 == 0 ? 2 : -2;
                        else if (k % p == 0 && k / p >= 1 && k / p <= 2 * m)
                            expect = 0;
                        else
                            expect = interval % 2 == 1 ? 2 : -2;
                        if (s != expect) return false;
                    }
                    for (int j = 1; j <= pp - 1; ++j) {
                        const int s = tab.sigma[j] + tab.sigma[pp - j];
                        int expect = 0;
                        if (family == TwistFamily::MinusPlus)
                            expect = j % M == 0 ? 2 : 0;
                        else
                            expect = j % M == m ? -2 : 0;
                        if (s != expect) return false;
                    }
                    return true;
                });
            }
    for (int p = 1; p <= r.p(3); ++p)
        r.check("a_closed_form_m2", "p=" + std::to_string(p) + " 50 random", [&] {
            const TwoBridge tb(10 * p + 1, 8 * p + 1);
            const TakataTables tab = takata_tables_general(tb);
            std::uniform_int_distribution<int> val(0, 6);
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<int> nbar(5 * p);
                for (auto& v : nbar) v = val(rng);
                std::sort(nbar.begin(), nbar.end());
                if (takata_a(tab, nbar) != takata_a_closed_m2(p, nbar)) return false;
            }
            return true;
        });
    r.check("rprime_inverts_ik", "l<=31", [] {
        for (int l = 3; l <= 31; l += 2)
            for (int t = 1; t < l; t += 2) {
                if (std::gcd(l, t) != 1) continue;
                const TakataTables tab = takata_tables_general(TwoBridge(l, t));
                const int pp = static_cast<int>(tab.sigma.size());
                for (int j = 1; j <= pp; ++j)
                    if (tab.ik[tab.rprime[j - 1] - 1] != j) return false;
            }
        return true;
    });
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, const std::optional<GridBounds>& caps) {
    VerifyReport report;
    report.suite = suite;
    Runner r{report.checks, caps.value_or(GridBounds{})};
    if (suite == "oracles" || suite == "all") suite_oracles(r);
    if (suite == "mirrors" || suite == "all") suite_mirrors(r);
    if (suite == "kz" || suite == "all") suite_kz(r);
    if (suite == "bailey" || suite == "all") suite_bailey(r);
    if (suite == "lemmas" || suite == "all") suite_lemmas(r);
    if (report.checks.empty() && suite != "all")
        throw std::invalid_argument("unknown suite: " + suite);
    return report;
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"check", c.name},
                          {"params", c.params},
                          {"pass", c.pass},
                          {"elapsed_ms", c.millis}});
    nlohmann::ordered_json j{{"suite", report.suite},
                     {"checks", checks},
                     {"overall", report.all_pass() ? "pass" : "fail"}};
    return j.dump(2);
}

}  // namespace dtj
