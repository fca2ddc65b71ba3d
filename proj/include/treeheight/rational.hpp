#pragma once

// Exact arbitrary-precision integers and rationals (GMP-backed).
// Every quantity upstream of the final float conversions lives here:
// no rounding, ever.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace treeheight {

using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Rational scalar, always stored in lowest terms with positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT: integers embed into the rationals
    Rational(const Integer& v) : q_(v) {}
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    // Parses "p" or "p/q" in base 10.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational scaled(const Integer& s) const {
        Rational r(*this);
        r.q_ *= mpq_class(s);
        return r;
    }

    // Exact division by a positive machine integer.
    Rational divided_by(unsigned long d) const {
        if (d == 0) throw std::domain_error("Rational: division by zero");
        Rational r(*this);
        r.q_ /= mpq_class(static_cast<unsigned long>(d));
        return r;
    }

    // "p" when integral, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }

    // Truncated toward zero, error below one ulp.
    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline Rational pow(const Rational& base, unsigned long exp) {
    return Rational(int_pow(base.numerator(), exp), int_pow(base.denominator(), exp));
}

inline Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

// Ring hooks used generically by the series engine. Over the plain rational
// ring the height weight y is evaluated at 1, so the shift is the identity.
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational height_shift(const Rational& c, unsigned) { return c; }

}  // namespace treeheight
