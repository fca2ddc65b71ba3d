#pragma once

// Truncated formal power series in x over an exact coefficient ring
// (Rational, YPolynomial, or Jet of one fixed order). Coefficients beyond
// the truncation order are never reported. Values are immutable once built.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "treeheight/jet.hpp"
#include "treeheight/polynomial.hpp"
#include "treeheight/rational.hpp"

namespace treeheight {

template <typename R>
class TruncatedSeries {
public:
    // Zero series of the given truncation order; `shape` supplies the ring
    // instance (e.g. the jet order) when R is not default-constructible as
    // the right ring element.
    explicit TruncatedSeries(unsigned order, const R& shape = R())
        : c_(order + 1, zero_like(shape)) {}

    // Coefficients [x^0..x^N]; shorter input is zero-padded, longer input
    // is rejected rather than silently truncated.
    TruncatedSeries(unsigned order, std::vector<R> coeffs, const R& shape = R())
        : c_(std::move(coeffs)) {
        if (c_.size() > order + 1)
            throw std::invalid_argument("TruncatedSeries: more coefficients than truncation order allows");
        c_.resize(order + 1, zero_like(shape));
    }

    unsigned truncation_order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const R& coeff(unsigned n) const { return c_.at(n); }
    const std::vector<R>& coefficients() const { return c_; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a.check_order(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a.check_order(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }

    // Cauchy product truncated at the shared order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries r(a.truncation_order(), a.zero_shape());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < r.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    TruncatedSeries truncated(unsigned m) const {
        if (m > truncation_order())
            throw std::invalid_argument("TruncatedSeries: cannot extend truncation order");
        TruncatedSeries r(m, zero_shape());
        for (unsigned i = 0; i <= m; ++i) r.c_[i] = c_[i];
        return r;
    }

    // Multiplication by x: order grows by one, constant term becomes zero.
    TruncatedSeries shifted_by_x() const {
        TruncatedSeries r(truncation_order() + 1, zero_shape());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + 1] = c_[i];
        return r;
    }

    // d/dx; the result is only known through order N-1.
    TruncatedSeries derivative() const {
        if (truncation_order() == 0) throw std::invalid_argument("TruncatedSeries: derivative of order-0 series");
        TruncatedSeries r(truncation_order() - 1, zero_shape());
        for (unsigned i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = c_[i].scaled(Integer(static_cast<long>(i)));
        return r;
    }

    R zero_shape() const { return zero_like(c_.front()); }

private:
    static R zero_like(const R& shape) { return ring_one(shape) - ring_one(shape); }

    void check_order(const TruncatedSeries& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument("TruncatedSeries: truncation order mismatch");
    }

    template <typename S>
    friend TruncatedSeries<S> exp(const TruncatedSeries<S>&);
    template <typename S>
    friend TruncatedSeries<S> geometric_inverse(const TruncatedSeries<S>&);
    template <typename S>
    friend TruncatedSeries<S> shift_y(const TruncatedSeries<S>&);

    std::vector<R> c_;
};

// exp(a) for a series with zero constant term, by the exact recurrence
// n*e_n = sum_{k=1}^{n} k*a_k*e_{n-k} (from e' = a'e); all divisions are
// by integer indices, so the result stays in the ring's fraction field.
template <typename R>
TruncatedSeries<R> exp(const TruncatedSeries<R>& a) {
    if (!a.coeff(0).is_zero())
        throw std::invalid_argument("exp: series must have zero constant term");
    const unsigned n_max = a.truncation_order();
    TruncatedSeries<R> e(n_max, a.zero_shape());
    e.c_[0] = ring_one(a.coeff(0));
    for (unsigned n = 1; n <= n_max; ++n) {
        R acc = a.zero_shape();
        for (unsigned k = 1; k <= n; ++k) {
            if (a.c_[k].is_zero()) continue;
            acc += (a.c_[k] * e.c_[n - k]).scaled(Integer(static_cast<long>(k)));
        }
        e.c_[n] = acc.divided_by(n);
    }
    return e;
}

// (1 - s)^{-1} as the truncated geometric series, for s with zero constant
// term: g_0 = 1, g_n = sum_{k=1}^{n} s_k g_{n-k}.
template <typename R>
TruncatedSeries<R> geometric_inverse(const TruncatedSeries<R>& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("geometric_inverse: series must have zero constant term");
    const unsigned n_max = s.truncation_order();
    TruncatedSeries<R> g(n_max, s.zero_shape());
    g.c_[0] = ring_one(s.coeff(0));
    for (unsigned n = 1; n <= n_max; ++n) {
        R acc = s.zero_shape();
        for (unsigned k = 1; k <= n; ++k) {
            if (s.c_[k].is_zero()) continue;
            acc += s.c_[k] * g.c_[n - k];
        }
        g.c_[n] = acc;
    }
    return g;
}

// The substitution x -> xy: the coefficient of x^n picks up a factor y^n
// (exact exponent shift for polynomials, binomial jet for jets).
template <typename R>
TruncatedSeries<R> shift_y(const TruncatedSeries<R>& a) {
    TruncatedSeries<R> r(a.truncation_order(), a.zero_shape());
    for (unsigned n = 0; n < a.c_.size(); ++n) r.c_[n] = height_shift(a.c_[n], n);
    return r;
}

}  // namespace treeheight
