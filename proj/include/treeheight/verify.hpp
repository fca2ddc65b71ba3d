#pragma once

// Cross-source identity checks. Every identity that ties two independent
// routes together (series engine vs Lagrange inversion vs enumerator vs
// exhaustive oracle vs closed forms) lives here under a stable name, so the
// CLI `verify` command and the test suites run the same list.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treeheight/enumerator.hpp"
#include "treeheight/jet.hpp"
#include "treeheight/lagrange.hpp"
#include "treeheight/moments.hpp"
#include "treeheight/oracle.hpp"
#include "treeheight/polynomial.hpp"
#include "treeheight/rational.hpp"
#include "treeheight/series.hpp"

namespace treeheight {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyConfig {
    unsigned series_order = 30;       // truncation for the series identities
    unsigned poly_n_max = 30;         // full-polynomial checks
    unsigned oracle_n_max = 7;        // exhaustive enumeration bound
    unsigned pipeline_n_max = 50;     // closed-form vs factorial-moment pipeline
    unsigned convergence_n = 2000;    // finite-size convergence point
    // Finite-size tolerances, frozen from a pilot run of the exact values
    // (the n = 2000 deviations are 2.375% mean, 4.834% variance, 1.48%/0.99%
    // for alpha_3/alpha_4).
    double mean_convergence_rtol = 0.025;
    double var_convergence_rtol = 0.05;
    double alpha_convergence_rtol = 0.02;
    // Test hook: when nonzero, replaces the stored alpha_4 reference so the
    // constants check must fail.
    double inject_alpha4_reference = 0.0;
};

namespace detail {

inline void report(std::vector<CheckResult>& out, const std::string& name, bool ok,
                   const std::string& detail_on_fail, const std::string& detail_on_pass = "ok") {
    out.push_back({name, ok, ok ? detail_on_pass : detail_on_fail});
}

template <typename T>
std::string str_of(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Reference evaluations of the limit constants, frozen at high precision.
struct ConstantReference {
    const char* name;
    double value;
    double actual;
};

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyConfig& cfg = {}) {
    std::vector<CheckResult> out;
    const unsigned N = cfg.series_order;

    // --- series engine -------------------------------------------------
    const auto R = rooted_tree_series(N);
    {
        auto rhs = exp(R.truncated(N - 1)).shifted_by_x();  // x * e^R, known through N
        detail::report(out, "series/R-fixed-point", rhs == R,
                       "R != x*exp(R) through order " + std::to_string(N));
    }
    {
        // x(1-R)R' = R, exact through order N (the x-shift restores one order)
        auto rp = R.derivative();  // order N-1
        TruncatedSeries<Rational> one_minus(N - 1);
        {
            std::vector<Rational> c(N);
            c[0] = Rational(1);
            one_minus = TruncatedSeries<Rational>(N - 1, std::move(c)) - R.truncated(N - 1);
        }
        auto lhs = (one_minus * rp).shifted_by_x();
        detail::report(out, "series/R-derivative-identity", lhs == R,
                       "x(1-R)R' != R through order " + std::to_string(N));
    }
    {
        // d/dy J(x,y) at y=1 from order-1 jets equals R^2/(1-R)^2.
        auto jets = weight_enumerator_jets(N, 1);
        TruncatedSeries<Rational> jy(N);
        {
            std::vector<Rational> c(N + 1);
            for (unsigned n = 1; n <= N; ++n)
                c[n] = jets[n - 1].coeff(1) / Rational(factorial(n));  // J_n'(1)/n! * 1!
            jy = TruncatedSeries<Rational>(N, std::move(c));
        }
        auto inv = geometric_inverse(R);  // 1/(1-R)
        auto rhs = R * R * inv * inv;
        detail::report(out, "series/Jy-identity", jy == rhs,
                       "jet y-derivative series != R^2/(1-R)^2 through order " + std::to_string(N));
    }

    // --- Lagrange inversion ---------------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 1; n <= N && ok; ++n) {
            Rational via_lagrange = lagrange_tree_coefficient(n);
            Rational closed(int_pow(Integer(static_cast<long>(n)), n - 1), factorial(n));
            if (via_lagrange != closed || via_lagrange != R.coeff(n)) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": " + via_lagrange.str() + " vs " + closed.str();
            }
        }
        detail::report(out, "lagrange/tree-coefficients", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        TruncatedSeries<Rational> one_series(N, std::vector<Rational>{Rational(1)});
        for (unsigned n = 1; n <= N && ok; ++n) {
            if (generalized_lagrange_coefficient(one_series, n) != lagrange_tree_coefficient(n)) {
                ok = false;
                detail = "G'=1 disagrees with the plain form at n=" + std::to_string(n);
            }
        }
        detail::report(out, "lagrange/generalized-reduces-to-plain", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        auto g_prime = total_height_mean_g_prime(N);
        for (unsigned n = 2; n <= N && ok; ++n) {
            Rational via_lagrange = generalized_lagrange_coefficient(g_prime, n);
            Rational closed(total_height_sum(n), factorial(n));
            if (via_lagrange != closed) {
                ok = false;
                detail = "J_n'(1)/n! mismatch at n=" + std::to_string(n) + ": " +
                         via_lagrange.str() + " vs " + closed.str();
            }
        }
        detail::report(out, "lagrange/mean-height-coefficients", ok, detail);
    }

    // --- enumerator ------------------------------------------------------
    const auto polys = weight_enumerators(cfg.poly_n_max);
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 2; n <= 5 && ok; ++n) {
            const Integer expected[] = {1, 8, 78, 944};
            Rational via_jet = factorial_moments(n, 1).factorial_moments[1].divided_by(n);
            Rational closed = Rational(total_height_sum(n)).divided_by(n);
            if (via_jet != Rational(expected[n - 2]) || closed != Rational(expected[n - 2])) {
                ok = false;
                detail = "A000435(" + std::to_string(n) + ") != " + expected[n - 2].get_str();
            }
        }
        detail::report(out, "enumerator/A000435-prefix", ok, detail, "1, 8, 78, 944");
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 1; n <= cfg.poly_n_max && ok; ++n) {
            Integer count = int_pow(Integer(static_cast<long>(n)), n - 1);
            if (polys[n - 1].eval(Rational(1)) != Rational(count)) {
                ok = false;
                detail = "J_n(1) != n^{n-1} at n=" + std::to_string(n);
            }
        }
        detail::report(out, "enumerator/total-count", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 2; n <= cfg.poly_n_max && ok; ++n) {
            const auto& p = polys[n - 1];
            bool span = p.trailing_degree() == static_cast<int>(n - 1) &&
                        p.degree() == static_cast<int>(n * (n - 1) / 2);
            bool star = p.coeff(n - 1) == Rational(Integer(static_cast<long>(n)));
            bool chain = p.coeff(n * (n - 1) / 2) == Rational(factorial(n));
            if (!(span && star && chain)) {
                ok = false;
                detail = "degree span / extreme coefficients wrong at n=" + std::to_string(n);
            }
        }
        detail::report(out, "enumerator/degree-span", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 1; n <= 12 && ok; ++n) {
            auto jets = factorial_moments(n, 6).factorial_moments;
            YPolynomial d = polys[n - 1];
            for (unsigned r = 0; r <= 6 && ok; ++r) {
                if (jets[r] != d.eval(Rational(1))) {
                    ok = false;
                    detail = "jet vs polynomial derivative at n=" + std::to_string(n) +
                             ", r=" + std::to_string(r);
                }
                d = d.derivative();
            }
        }
        detail::report(out, "enumerator/jet-vs-polynomial-moments", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 1; n <= 40 && ok; ++n) {
            Rational via_jet = factorial_moments(n, 1).factorial_moments[1];
            if (via_jet != Rational(total_height_sum(n))) {
                ok = false;
                detail = "J_n'(1) closed form mismatch at n=" + std::to_string(n);
            }
        }
        detail::report(out, "enumerator/mean-closed-form", ok, detail);
    }

    // --- oracle ----------------------------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 1; n <= cfg.oracle_n_max && ok; ++n) {
            std::uint64_t count = 0;
            for_each_rooted_tree(n, [&](const RootedTree&) { ++count; });
            Integer expected = int_pow(Integer(static_cast<long>(n)), n - 1);
            if (Integer(static_cast<unsigned long>(count)) != expected) {
                ok = false;
                detail = "count at n=" + std::to_string(n) + " is " + std::to_string(count) +
                         ", want " + expected.get_str();
            }
        }
        detail::report(out, "oracle/rooted-tree-count", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 1; n <= cfg.oracle_n_max && ok; ++n) {
            auto dist = exact_distribution(n);
            const auto& p = polys[n - 1];
            // distribution == coefficient map
            for (int e = 0; e <= p.degree() && ok; ++e) {
                Rational c = p.coeff(e);
                auto it = dist.counts.find(static_cast<std::uint64_t>(e));
                Integer seen = it == dist.counts.end()
                                   ? Integer(0)
                                   : Integer(static_cast<unsigned long>(it->second));
                if (c != Rational(seen)) {
                    ok = false;
                    detail = "J_" + std::to_string(n) + " coefficient of y^" + std::to_string(e) +
                             " != oracle count";
                }
            }
            if (ok && dist.counts.size() != static_cast<std::size_t>([&] {
                    unsigned nonzero = 0;
                    for (int e = 0; e <= p.degree(); ++e)
                        if (!p.coeff(e).is_zero()) ++nonzero;
                    return nonzero;
                }())) {
                ok = false;
                detail = "oracle support differs from polynomial support at n=" + std::to_string(n);
            }
        }
        detail::report(out, "oracle/distribution-matches-enumerator", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 1; n <= cfg.oracle_n_max && ok; ++n) {
            auto rep = central_from_distribution(exact_distribution(n), 2);
            if (rep.mean != W(n)) {
                ok = false;
                detail = "oracle mean != W_n at n=" + std::to_string(n);
            }
        }
        detail::report(out, "oracle/mean-equals-W", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 3; n <= 6 && ok; ++n) {
            // decode must be injective over all sequences
            std::vector<unsigned> seq(n - 2, 1);
            std::vector<std::vector<std::pair<unsigned, unsigned>>> seen;
            for (;;) {
                auto edges = prufer_decode(seq, n);
                for (auto& e : edges)
                    if (e.first > e.second) std::swap(e.first, e.second);
                std::sort(edges.begin(), edges.end());
                seen.push_back(edges);
                std::size_t pos = 0;
                while (pos < seq.size() && seq[pos] == n) seq[pos++] = 1;
                if (pos == seq.size()) break;
                ++seq[pos];
            }
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
                ok = false;
                detail = "decode not injective at n=" + std::to_string(n);
            }
            Integer expected = int_pow(Integer(static_cast<long>(n)), n - 2);
            if (ok && Integer(static_cast<unsigned long>(seen.size())) != expected) {
                ok = false;
                detail = "sequence count wrong at n=" + std::to_string(n);
            }
        }
        detail::report(out, "oracle/prufer-bijection", ok, detail);
    }

    // --- moments: three-way agreement -------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 3; n <= cfg.oracle_n_max && ok; ++n) {
            auto closed = central_closed(n);
            auto pipeline = factorial_to_central(factorial_moments(n, 4).factorial_moments, 4);
            auto oracle = central_from_distribution(exact_distribution(n), 4);
            for (unsigned k = 2; k <= 4 && ok; ++k) {
                if (closed.mu(k) != pipeline.mu(k) || closed.mu(k) != oracle.mu(k)) {
                    ok = false;
                    detail = "mu_" + std::to_string(k) + " disagrees at n=" + std::to_string(n);
                }
            }
        }
        detail::report(out, "moments/three-way-agreement", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        auto sweep = [&] {
            std::vector<unsigned> pts;
            for (unsigned n = cfg.oracle_n_max + 1; n <= cfg.pipeline_n_max; ++n) pts.push_back(n);
            return pts;
        }();
        auto results = factorial_moment_sweep(sweep, 4);
        for (std::size_t i = 0; i < sweep.size() && ok; ++i) {
            auto closed = central_closed(sweep[i]);
            auto pipeline = factorial_to_central(results[i].factorial_moments, 4);
            for (unsigned k = 2; k <= 4 && ok; ++k) {
                if (closed.mu(k) != pipeline.mu(k)) {
                    ok = false;
                    detail = "mu_" + std::to_string(k) + " disagrees at n=" + std::to_string(sweep[i]);
                }
            }
        }
        detail::report(out, "moments/closed-vs-pipeline", ok, detail);
    }
    {
        bool ok = variance_closed(1).is_zero() && variance_closed(2).is_zero() &&
                  third_central_closed(2).is_zero() && fourth_central_closed(2).is_zero();
        detail::report(out, "moments/degenerate-small-n", ok,
                       "variance/higher moments not zero at n=1,2");
    }

    // --- limit constants ---------------------------------------------------
    {
        const auto& lc = limit_constants();
        const double a4_ref =
            cfg.inject_alpha4_reference != 0.0 ? cfg.inject_alpha4_reference : 3.560394897132889;
        const detail::ConstantReference refs[] = {
            {"cv", 0.24704848501047098, lc.cv_limit},
            {"mean_coeff", 1.2533141373155003, lc.mean_coeff},
            {"var_coeff", 0.095870339871770047, lc.var_coeff},
            {"mu3_coeff", 0.020795807319666651, lc.mu3_coeff},
            {"mu4_coeff", 0.03272402410673052, lc.mu4_coeff},
            {"alpha_3", 0.70056652935965032, lc.alpha_at(3)},
            {"alpha_4", a4_ref, lc.alpha_at(4)},
            {"alpha_5", 7.2563753582799571, lc.alpha_at(5)},
            {"alpha_6", 27.685525695770609, lc.alpha_at(6)},
            {"alpha_7", 90.01718290936033, lc.alpha_at(7)},
            {"alpha_8", 358.80904151261251, lc.alpha_at(8)},
            {"alpha_9", 1460.7011342971821, lc.alpha_at(9)},
            {"alpha_10", 6498.233818, lc.alpha_at(10)},
            {"alpha_11", 30389.98955, lc.alpha_at(11)},
            {"alpha_12", 150516.4157, lc.alpha_at(12)},
        };
        bool ok = true;
        std::string detail;
        for (const auto& r : refs) {
            if (std::abs(r.actual / r.value - 1.0) > 1e-12) {
                ok = false;
                detail += std::string(r.name) + " off reference; ";
            }
        }
        detail::report(out, "moments/limit-constants", ok, detail);
    }

    // --- finite-size convergence (closed-form route; calibrated tolerances) --
    {
        const auto& lc = limit_constants();
        bool ok = true;
        std::string detail;
        double prev = -1;
        std::vector<unsigned> pts;
        for (double x = 10; x < cfg.convergence_n; x *= 1.25)
            pts.push_back(static_cast<unsigned>(x));
        pts.push_back(cfg.convergence_n);
        for (unsigned n : pts) {
            double v = W(n).to_double() / std::pow(static_cast<double>(n), 1.5);
            if (v <= prev) {
                ok = false;
                detail = "W_n/n^{3/2} not increasing at n=" + std::to_string(n);
                break;
            }
            prev = v;
        }
        double final_dev = std::abs(prev / lc.mean_coeff - 1.0);
        if (ok && final_dev > cfg.mean_convergence_rtol) {
            ok = false;
            detail = "final deviation " + detail::str_of(final_dev) + " above " +
                     detail::str_of(cfg.mean_convergence_rtol);
        }
        detail::report(out, "moments/Wn-scaled-convergence", ok, detail,
                       "monotone, final dev " + detail::str_of(final_dev));
    }
    {
        const auto& lc = limit_constants();
        const unsigned n = cfg.convergence_n;
        double v = variance_closed(n).to_double() / std::pow(static_cast<double>(n), 3.0);
        double dev = std::abs(v / lc.var_coeff - 1.0);
        detail::report(out, "moments/variance-scaled-convergence", dev <= cfg.var_convergence_rtol,
                       "deviation " + detail::str_of(dev) + " above " +
                           detail::str_of(cfg.var_convergence_rtol),
                       "deviation " + detail::str_of(dev));
    }
    {
        const auto& lc = limit_constants();
        const unsigned n = cfg.convergence_n;
        auto rep = central_closed(n);
        auto alphas = standardized_moments(rep, 4);
        double dev3 = std::abs(alphas[0] / lc.alpha_at(3) - 1.0);
        double dev4 = std::abs(alphas[1] / lc.alpha_at(4) - 1.0);
        bool ok = dev3 <= cfg.alpha_convergence_rtol && dev4 <= cfg.alpha_convergence_rtol;
        detail::report(out, "moments/alpha-convergence", ok,
                       "alpha_3 dev " + detail::str_of(dev3) + ", alpha_4 dev " +
                           detail::str_of(dev4),
                       "alpha_3 dev " + detail::str_of(dev3) + ", alpha_4 dev " +
                           detail::str_of(dev4));
    }

    return out;
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

}  // namespace treeheight
