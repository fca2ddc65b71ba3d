#pragma once

// Dense univariate polynomials in the height-weight variable y with exact
// rational coefficients. Canonical form: trailing zeros stripped, the zero
// polynomial has an empty coefficient vector.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treeheight/rational.hpp"

namespace treeheight {

class YPolynomial {
public:
    YPolynomial() = default;
    explicit YPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static YPolynomial zero() { return YPolynomial(); }
    static YPolynomial one() { return constant(Rational(1)); }
    static YPolynomial constant(const Rational& v) {
        YPolynomial p;
        if (!v.is_zero()) p.c_.push_back(v);
        return p;
    }
    static YPolynomial monomial(unsigned exp, const Rational& coeff) {
        YPolynomial p;
        if (!coeff.is_zero()) {
            p.c_.assign(exp + 1, Rational());
            p.c_[exp] = coeff;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Smallest exponent with a nonzero coefficient; -1 for zero.
    int trailing_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    const std::vector<Rational>& coefficients() const { return c_; }

    YPolynomial& operator+=(const YPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        strip();
        return *this;
    }
    YPolynomial& operator-=(const YPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        strip();
        return *this;
    }
    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { a += b; return a; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { a -= b; return a; }
    YPolynomial operator-() const {
        YPolynomial r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return YPolynomial();
        YPolynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.strip();
        return r;
    }

    friend bool operator==(const YPolynomial& a, const YPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const YPolynomial& a, const YPolynomial& b) { return !(a == b); }

    YPolynomial scaled(const Rational& s) const {
        if (s.is_zero()) return YPolynomial();
        YPolynomial r(*this);
        for (auto& c : r.c_) c *= s;
        return r;
    }
    YPolynomial scaled(const Integer& s) const { return scaled(Rational(s)); }
    YPolynomial divided_by(unsigned long d) const {
        YPolynomial r(*this);
        for (auto& c : r.c_) c = c.divided_by(d);
        return r;
    }

    // Multiplication by y^k.
    YPolynomial shifted_up(unsigned k) const {
        if (is_zero() || k == 0) return *this;
        YPolynomial r;
        r.c_.assign(c_.size() + k, Rational());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // Formal derivative d/dy.
    YPolynomial derivative() const {
        YPolynomial r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = c_[i].scaled(Integer(static_cast<long>(i)));
        r.strip();
        return r;
    }

    // Horner evaluation.
    Rational eval(const Rational& v) const {
        Rational acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[i].str();
            if (i >= 1) out += "*y";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline YPolynomial ring_one(const YPolynomial&) { return YPolynomial::one(); }
inline YPolynomial height_shift(const YPolynomial& p, unsigned k) { return p.shifted_up(k); }

}  // namespace treeheight
