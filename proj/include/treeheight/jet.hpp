#pragma once

// Truncated Taylor expansions at y = 1 ("jets") of a fixed order r.
// Coefficient j holds the j-th Taylor coefficient, i.e. f^{(j)}(1)/j!.
// Arithmetic on jets propagates the first r derivatives through any
// expression without carrying full polynomials.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "treeheight/polynomial.hpp"
#include "treeheight/rational.hpp"

namespace treeheight {

class Jet {
public:
    Jet() : Jet(0) {}
    explicit Jet(unsigned order) : c_(order + 1, Rational()) {}

    static Jet constant(unsigned order, const Rational& v) {
        Jet j(order);
        j.c_[0] = v;
        return j;
    }
    static Jet one(unsigned order) { return constant(order, Rational(1)); }

    // Jet of y^n at y = 1: coefficients C(n, j), j = 0..order.
    static Jet y_power(unsigned long n, unsigned order) {
        Jet j(order);
        for (unsigned r = 0; r <= order; ++r) {
            if (r > n) break;
            j.c_[r] = Rational(binomial(n, r));
        }
        return j;
    }

    // Taylor expansion of a polynomial about y = 1; coefficient j equals
    // sum_h C(h, j) [y^h]p, which also equals p^{(j)}(1)/j!.
    static Jet from_polynomial(const YPolynomial& p, unsigned order) {
        Jet j(order);
        const auto& pc = p.coefficients();
        for (std::size_t h = 0; h < pc.size(); ++h) {
            if (pc[h].is_zero()) continue;
            for (unsigned r = 0; r <= order && r <= h; ++r)
                j.c_[r] += pc[h].scaled(binomial(h, r));
        }
        return j;
    }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const Rational& coeff(unsigned j) const { return c_.at(j); }
    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    Jet& operator+=(const Jet& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    Jet operator-() const {
        Jet r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    // Cauchy product truncated at the shared order.
    friend Jet operator*(const Jet& a, const Jet& b) {
        a.check_order(b);
        Jet r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < r.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

    Jet scaled(const Rational& s) const {
        Jet r(*this);
        for (auto& c : r.c_) c *= s;
        return r;
    }
    Jet scaled(const Integer& s) const { return scaled(Rational(s)); }
    Jet divided_by(unsigned long d) const {
        Jet r(*this);
        for (auto& c : r.c_) c = c.divided_by(d);
        return r;
    }

private:
    void check_order(const Jet& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument(
                "Jet: order mismatch (" + std::to_string(order()) + " vs " +
                std::to_string(o.order()) + ")");
    }

    std::vector<Rational> c_;
};

inline Jet ring_one(const Jet& shape) { return Jet::one(shape.order()); }
inline Jet height_shift(const Jet& j, unsigned k) { return j * Jet::y_power(k, j.order()); }

}  // namespace treeheight
