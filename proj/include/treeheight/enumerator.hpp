#pragma once

// Weight enumerators of rooted labeled trees by total height.
//
// J_n(y) = sum over rooted labeled trees T on n vertices of y^{TotalHeight(T)}.
// Removing the root of such a tree leaves an unordered forest whose vertices
// all gain one unit of height, which gives J(x,y) = x*e^{J(xy,y)} for the
// EGF J(x,y) = sum J_n(y) x^n/n!. Expanding the exponential through the
// derivative recurrence and clearing factorials yields the triangular pass
//
//     (n-1) * J_n(y) = sum_{k=1}^{n-1} k * C(n,k) * y^k * J_k(y) * J_{n-k}(y)
//
// in which every intermediate value is an integer polynomial (or integer
// jet). Coefficient n depends only on coefficients below n, so one pass
// solves the equation; the same code runs over full polynomials (exact
// distribution) and over jets at y = 1 (factorial moments at large n).

#include <optional>
#include <stdexcept>
#include <vector>

#include "treeheight/jet.hpp"
#include "treeheight/polynomial.hpp"
#include "treeheight/rational.hpp"
#include "treeheight/series.hpp"

namespace treeheight {

struct EnumeratorResult {
    unsigned n = 0;
    std::optional<YPolynomial> polynomial;  // J_n(y), when requested
    std::vector<Rational> factorial_moments;  // [r] = J_n^{(r)}(1)
};

// One triangular pass over a generic coefficient ring. Returns J_1..J_n_max
// (0-based: index i holds J_{i+1}).
template <typename R>
std::vector<R> solve_height_recurrence(unsigned n_max, const R& one_element) {
    if (n_max < 1) throw std::invalid_argument("solve_height_recurrence: n_max must be >= 1");
    std::vector<R> j;
    j.reserve(n_max);
    j.push_back(one_element);  // J_1 = 1
    std::vector<R> shifted;    // shifted[k-1] = y^k * J_k, filled as k becomes available
    shifted.reserve(n_max);
    shifted.push_back(height_shift(one_element, 1));
    for (unsigned n = 2; n <= n_max; ++n) {
        Integer binom(static_cast<long>(n));  // C(n,1)
        R acc = (shifted[0] * j[n - 2]).scaled(binom);
        for (unsigned k = 2; k < n; ++k) {
            binom *= n - k + 1;
            binom /= k;  // exact: C(n,k) from C(n,k-1)
            acc += (shifted[k - 1] * j[n - k - 1]).scaled(binom * k);
        }
        j.push_back(acc.divided_by(n - 1));
        if (n < n_max) shifted.push_back(height_shift(j[n - 1], n));
    }
    return j;
}

// J_1(y)..J_N(y) exactly.
inline std::vector<YPolynomial> weight_enumerators(unsigned n_max) {
    return solve_height_recurrence<YPolynomial>(n_max, YPolynomial::one());
}

// Jets of J_1..J_N at y = 1, order `max_order`.
inline std::vector<Jet> weight_enumerator_jets(unsigned n_max, unsigned max_order) {
    return solve_height_recurrence<Jet>(n_max, Jet::one(max_order));
}

namespace detail {
// Factorial moments from a jet: J^{(r)}(1) = r! * (coefficient r). These are
// counts, so integrality is asserted as a sanity check on the arithmetic.
inline std::vector<Rational> jet_to_factorial_moments(const Jet& jet) {
    std::vector<Rational> out;
    out.reserve(jet.order() + 1);
    for (unsigned r = 0; r <= jet.order(); ++r) {
        Rational v = jet.coeff(r).scaled(factorial(r));
        if (!v.is_integer())
            throw std::logic_error("factorial moment came out non-integral");
        out.push_back(v);
    }
    return out;
}
}  // namespace detail

// Exact factorial moments J_n^{(r)}(1) for r = 0..max_order via the jet
// backend; optionally also the full polynomial (small n only).
inline EnumeratorResult factorial_moments(unsigned n, unsigned max_order,
                                          bool with_polynomial = false) {
    EnumeratorResult res;
    res.n = n;
    auto jets = weight_enumerator_jets(n, max_order);
    res.factorial_moments = detail::jet_to_factorial_moments(jets[n - 1]);
    if (with_polynomial) res.polynomial = weight_enumerators(n)[n - 1];
    return res;
}

// Factorial moments at several points from a single pass (the recurrence
// computes every prefix anyway). `points` must be nonempty, ascending not
// required; duplicates allowed.
inline std::vector<EnumeratorResult> factorial_moment_sweep(const std::vector<unsigned>& points,
                                                            unsigned max_order) {
    if (points.empty()) throw std::invalid_argument("factorial_moment_sweep: no points");
    unsigned n_max = 1;
    for (unsigned p : points) {
        if (p < 1) throw std::invalid_argument("factorial_moment_sweep: points must be >= 1");
        if (p > n_max) n_max = p;
    }
    auto jets = weight_enumerator_jets(n_max, max_order);
    std::vector<EnumeratorResult> out;
    out.reserve(points.size());
    for (unsigned p : points) {
        EnumeratorResult res;
        res.n = p;
        res.factorial_moments = detail::jet_to_factorial_moments(jets[p - 1]);
        out.push_back(std::move(res));
    }
    return out;
}

// The rooted-tree EGF R(x) = sum r(n) x^n/n!, solved coefficient by
// coefficient from R = x*e^R: with B = e^R, [x^n]R = b_{n-1} and
// n*b_n = sum_{k=1}^{n} k*r_k*b_{n-k}.
inline TruncatedSeries<Rational> rooted_tree_series(unsigned order) {
    if (order < 1) throw std::invalid_argument("rooted_tree_series: order must be >= 1");
    std::vector<Rational> r(order + 1), b(order + 1);
    b[0] = Rational(1);
    for (unsigned n = 1; n <= order; ++n) {
        r[n] = b[n - 1];
        Rational acc;
        for (unsigned k = 1; k <= n; ++k)
            acc += (r[k] * b[n - k]).scaled(Integer(static_cast<long>(k)));
        b[n] = acc.divided_by(n);
    }
    return TruncatedSeries<Rational>(order, std::move(r));
}

}  // namespace treeheight
