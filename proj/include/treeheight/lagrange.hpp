#pragma once

// Coefficient extraction for series inverting R = x*e^R.
//
// Plain form:        [x^n] R(x)    = (1/n) [z^{n-1}] e^{nz}
// Generalized form:  [x^n] G(R(x)) = (1/n) [z^{n-1}] G'(z) e^{nz}
//
// Both are computed with series arithmetic, not closed forms, so they serve
// as an independent route to the enumerator's coefficients.

#include <stdexcept>
#include <vector>

#include "treeheight/rational.hpp"
#include "treeheight/series.hpp"

namespace treeheight {

namespace detail {
// e^{nz} truncated at `order`, via exp of the linear series n*z.
inline TruncatedSeries<Rational> exp_nz(unsigned long n, unsigned order) {
    TruncatedSeries<Rational> nz(order, std::vector<Rational>{Rational(0), Rational(Integer(static_cast<long>(n)))});
    return exp(nz);
}
}  // namespace detail

// [x^n] of the rooted-tree series R(x), n >= 1.
inline Rational lagrange_tree_coefficient(unsigned long n) {
    if (n < 1) throw std::invalid_argument("lagrange_tree_coefficient: n must be >= 1");
    auto e = detail::exp_nz(n, static_cast<unsigned>(n - 1));
    return e.coeff(static_cast<unsigned>(n - 1)).divided_by(n);
}

// (1/n) [z^{n-1}] G'(z) e^{nz}; G' must be supplied to order >= n-1.
inline Rational generalized_lagrange_coefficient(const TruncatedSeries<Rational>& g_prime,
                                                 unsigned long n) {
    if (n < 1) throw std::invalid_argument("generalized_lagrange_coefficient: n must be >= 1");
    if (g_prime.truncation_order() < n - 1)
        throw std::invalid_argument(
            "generalized_lagrange_coefficient: G' truncated below order n-1");
    auto product = g_prime.truncated(static_cast<unsigned>(n - 1)) *
                   detail::exp_nz(n, static_cast<unsigned>(n - 1));
    return product.coeff(static_cast<unsigned>(n - 1)).divided_by(n);
}

// G'(z) = 2z/(1-z)^3 — the derivative of G(z) = z^2/(1-z)^2, whose images
// under the generalized form are J_n'(1)/n!. Built by truncated geometric
// expansion, so it is exact at finite order.
inline TruncatedSeries<Rational> total_height_mean_g_prime(unsigned order) {
    TruncatedSeries<Rational> z(order, std::vector<Rational>{Rational(0), Rational(1)});
    auto inv = geometric_inverse(z);       // 1/(1-z)
    auto cube = inv * inv * inv;           // 1/(1-z)^3
    TruncatedSeries<Rational> two_z(order, std::vector<Rational>{Rational(0), Rational(2)});
    return two_z * cube;
}

}  // namespace treeheight
