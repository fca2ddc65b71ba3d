#pragma once

// Exact and asymptotic statistics of the total-height random variable.
//
// W(n) is the exact mean; the closed forms for the central moments of
// orders 2..4 are polynomials in n and W(n); the conversion chain
// factorial -> raw -> central is the Stirling-number route. Floating
// output appears only at the last step (standardized moments, limit
// constants), always from exact rationals.

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "treeheight/oracle.hpp"
#include "treeheight/rational.hpp"

namespace treeheight {

// Unnormalized total-height sum over all rooted labeled trees on n
// vertices: J_n'(1) = sum_{k=0}^{n-2} n^k * n!/k! (an integer; the empty
// sum at n=1 gives 0). J_n'(1)/n is OEIS A000435.
inline Integer total_height_sum(unsigned n) {
    if (n < 1) throw std::invalid_argument("total_height_sum: n must be >= 1");
    if (n == 1) return 0;
    // falling factorials n!/k! for k = n-2 .. 0, then one ascending pass
    std::vector<Integer> falling(n - 1);
    Integer ff = Integer(static_cast<long>(n)) * static_cast<long>(n - 1);  // n!/(n-2)!
    for (unsigned k = n - 2;; --k) {
        falling[k] = ff;
        if (k == 0) break;
        ff *= k;
    }
    Integer sum = 0;
    Integer npow = 1;
    for (unsigned k = 0; k <= n - 2; ++k) {
        sum += npow * falling[k];
        npow *= static_cast<long>(n);
    }
    return sum;
}

// Exact average total height W_n = J_n'(1) / n^{n-1}.
inline Rational W(unsigned n) {
    if (n < 1) throw std::invalid_argument("W: n must be >= 1");
    return Rational(total_height_sum(n), int_pow(Integer(static_cast<long>(n)), n - 1));
}

inline Rational mean_total_height(unsigned n) { return W(n); }

// Central moments of orders 2..4 as polynomials in n and W(n).
inline Rational variance_closed(unsigned n) {
    const Rational w = W(n);
    const Rational nn(Integer(static_cast<long>(n)));
    return -(w * w) - Rational(17, 6) * nn * w + Rational(5, 3) * nn * nn * (nn - Rational(1));
}

inline Rational third_central_closed(unsigned n) {
    const Rational w = W(n);
    const Rational nn(Integer(static_cast<long>(n)));
    const Rational n2 = nn * nn, n3 = n2 * nn, n4 = n3 * nn;
    return Rational(2) * w * w * w + Rational(17, 2) * nn * w * w +
           (-Rational(25, 8) * n3 + Rational(277, 24) * n2 - Rational(1, 60) * nn) * w -
           Rational(151, 30) * n4 + Rational(76, 15) * n3 - Rational(1, 30) * n2;
}

inline Rational fourth_central_closed(unsigned n) {
    const Rational w = W(n);
    const Rational nn(Integer(static_cast<long>(n)));
    const Rational n2 = nn * nn, n3 = n2 * nn, n4 = n3 * nn, n5 = n4 * nn, n6 = n5 * nn;
    const Rational w2 = w * w, w3 = w2 * w, w4 = w2 * w2;
    return -Rational(3) * w4 - Rational(17) * nn * w3 +
           (Rational(5, 2) * n3 - Rational(217, 6) * n2 + Rational(1, 15) * nn) * w2 +
           (Rational(649, 80) * n4 - Rational(74381, 2160) * n3 + Rational(433, 2520) * n2 +
            Rational(1, 105) * nn) * w +
           Rational(221, 63) * n6 + Rational(4693, 540) * n5 - Rational(4651, 378) * n4 +
           Rational(109, 1260) * n3 + Rational(2, 105) * n2;
}

// Stirling numbers of the second kind, triangular recurrence, cached.
inline constexpr unsigned kMaxMomentOrder = 16;

inline const Integer& stirling2(unsigned j, unsigned k) {
    static const auto table = [] {
        std::vector<std::vector<Integer>> t(kMaxMomentOrder + 1);
        for (unsigned n = 0; n <= kMaxMomentOrder; ++n) {
            t[n].resize(n + 1);
            t[n][0] = (n == 0) ? 1 : 0;
            for (unsigned m = 1; m <= n; ++m)
                t[n][m] = (m <= n - 1 ? t[n - 1][m] * static_cast<long>(m) : Integer(0)) +
                          (m - 1 <= n - 1 ? t[n - 1][m - 1] : Integer(0));
        }
        return t;
    }();
    if (j > kMaxMomentOrder || k > j)
        throw std::invalid_argument("stirling2: order above cap " +
                                    std::to_string(kMaxMomentOrder));
    return table[j][k];
}

enum class MomentSource { closed_form, enumerator, oracle };

inline std::string to_string(MomentSource s) {
    switch (s) {
        case MomentSource::closed_form: return "closed_form";
        case MomentSource::enumerator: return "enumerator";
        case MomentSource::oracle: return "oracle";
    }
    return "?";
}

struct MomentReport {
    unsigned n = 0;
    Rational count;  // number of trees (mass of the distribution)
    Rational mean;
    std::vector<Rational> central;  // index k holds mu_k, k = 0..r (mu_0 = 1, mu_1 = 0)
    MomentSource source = MomentSource::enumerator;

    const Rational& mu(unsigned k) const { return central.at(k); }
    unsigned max_order() const { return static_cast<unsigned>(central.size()) - 1; }
};

// Raw moments via E[X^j] = sum_k S(j,k) f_k / f_0, then central moments by
// the binomial expansion about the mean. f[r] = J^{(r)}(1) with f[0] the
// total count.
inline MomentReport factorial_to_central(const std::vector<Rational>& factorial_moments,
                                         unsigned r,
                                         MomentSource source = MomentSource::enumerator) {
    if (factorial_moments.empty() || factorial_moments[0].is_zero() ||
        factorial_moments[0].sign() < 0)
        throw std::invalid_argument("factorial_to_central: f[0] must be a positive count");
    if (r >= factorial_moments.size())
        throw std::invalid_argument("factorial_to_central: order " + std::to_string(r) +
                                    " exceeds available factorial moments (" +
                                    std::to_string(factorial_moments.size() - 1) + ")");
    const Rational& count = factorial_moments[0];
    std::vector<Rational> raw(r + 1);  // raw[j] = E[X^j]
    raw[0] = Rational(1);
    for (unsigned j = 1; j <= r; ++j) {
        Rational acc;
        for (unsigned k = 1; k <= j; ++k)
            acc += factorial_moments[k].scaled(stirling2(j, k));
        raw[j] = acc / count;
    }
    MomentReport rep;
    rep.count = count;
    rep.mean = r >= 1 ? raw[1] : Rational();
    rep.central.assign(r + 1, Rational());
    rep.central[0] = Rational(1);
    for (unsigned k = 2; k <= r; ++k) {
        Rational acc;
        Rational neg_mean_pow(1);  // (-mean)^{k-j}, built from the top down
        // mu_k = sum_{j=0}^{k} C(k,j) raw_j (-mean)^{k-j}
        for (unsigned j = k;; --j) {
            acc += raw[j].scaled(binomial(k, j)) * neg_mean_pow;
            if (j == 0) break;
            neg_mean_pow *= -rep.mean;
        }
        rep.central[k] = acc;
    }
    rep.source = source;
    return rep;
}

// Exact central moments straight from an exhaustive distribution.
inline MomentReport central_from_distribution(const HeightDistribution& dist, unsigned r) {
    Integer total = 0;
    Integer weighted = 0;
    for (const auto& [h, c] : dist.counts) {
        total += Integer(static_cast<unsigned long>(c));
        weighted += Integer(static_cast<unsigned long>(c)) * Integer(static_cast<unsigned long>(h));
    }
    if (total == 0) throw std::invalid_argument("central_from_distribution: empty distribution");
    MomentReport rep;
    rep.n = dist.n;
    rep.count = Rational(total);
    rep.mean = Rational(weighted, total);
    rep.central.assign(r + 1, Rational());
    rep.central[0] = Rational(1);
    for (unsigned k = 2; k <= r; ++k) {
        Rational acc;
        for (const auto& [h, c] : dist.counts) {
            Rational dev = Rational(Integer(static_cast<unsigned long>(h))) - rep.mean;
            acc += pow(dev, k).scaled(Integer(static_cast<unsigned long>(c)));
        }
        rep.central[k] = acc / rep.count;
    }
    rep.source = MomentSource::oracle;
    return rep;
}

// Closed-form report, orders 2..4 (1 gives just the mean).
inline MomentReport central_closed(unsigned n, unsigned r = 4) {
    if (r > 4)
        throw std::invalid_argument("central_closed: closed forms cover orders <= 4");
    MomentReport rep;
    rep.n = n;
    rep.count = Rational(int_pow(Integer(static_cast<long>(n)), n - 1));
    rep.mean = W(n);
    rep.central.assign(r + 1, Rational());
    rep.central[0] = Rational(1);
    if (r >= 2) rep.central[2] = variance_closed(n);
    if (r >= 3) rep.central[3] = third_central_closed(n);
    if (r >= 4) rep.central[4] = fourth_central_closed(n);
    rep.source = MomentSource::closed_form;
    return rep;
}

// alpha_k = mu_k / mu_2^{k/2} for k = 3..up_to, as doubles with relative
// error well under 1e-12: even k is an exact rational converted once; odd k
// goes through sign * sqrt(mu_k^2 / mu_2^k).
inline std::vector<double> standardized_moments(const MomentReport& rep, unsigned up_to) {
    if (up_to < 3 || up_to > rep.max_order())
        throw std::invalid_argument("standardized_moments: order out of range");
    const Rational& var = rep.mu(2);
    if (var.sign() <= 0)
        throw std::domain_error("standardized_moments: variance must be positive (n >= 3)");
    std::vector<double> out;
    out.reserve(up_to - 2);
    for (unsigned k = 3; k <= up_to; ++k) {
        const Rational& mu_k = rep.mu(k);
        if (k % 2 == 0) {
            out.push_back((mu_k / pow(var, k / 2)).to_double());
        } else {
            Rational squared = (mu_k * mu_k) / pow(var, k);
            double v = std::sqrt(squared.to_double());
            out.push_back(mu_k.sign() < 0 ? -v : v);
        }
    }
    return out;
}

// Limits of the scaled statistics as n -> infinity. Everything through
// alpha_9 is evaluated from its closed form in pi (long double to absorb
// the cancellation in the higher numerators); alpha_10..alpha_12 have no
// in-repo closed form and are stored reference decimals.
struct LimitConstants {
    double cv_limit;     // sigma/mean
    double mean_coeff;   // W_n ~ mean_coeff * n^{3/2}
    double var_coeff;    // mu_2 ~ var_coeff * n^3
    double mu3_coeff;    // mu_3 ~ mu3_coeff * n^{9/2}
    double mu4_coeff;    // mu_4 ~ mu4_coeff * n^6
    std::map<unsigned, double> alpha;  // k -> limit of alpha_k, k = 3..12

    double alpha_at(unsigned k) const {
        auto it = alpha.find(k);
        if (it == alpha.end())
            throw std::invalid_argument("alpha limit known only for k = 3..12");
        return it->second;
    }
};

inline const LimitConstants& limit_constants() {
    static const LimitConstants c = [] {
        using L = long double;
        const L pi = std::numbers::pi_v<L>;
        const L q = 10.0L - 3.0L * pi;        // 10 - 3*pi
        const L s = std::sqrt(3.0L) * std::sqrt(pi / q);
        LimitConstants r;
        r.mean_coeff = static_cast<double>(std::sqrt(pi / 2.0L));
        r.var_coeff = static_cast<double>(5.0L / 3.0L - pi / 2.0L);
        r.mu3_coeff = static_cast<double>(std::sqrt(2.0L) * pi * std::sqrt(pi) / 2.0L -
                                          25.0L * std::sqrt(2.0L) * std::sqrt(pi) / 16.0L);
        r.mu4_coeff = static_cast<double>(-3.0L * pi * pi / 4.0L + 5.0L * pi / 4.0L + 221.0L / 63.0L);
        r.cv_limit = static_cast<double>(std::sqrt(2.0L) / 6.0L *
                                         std::sqrt(60.0L - 18.0L * pi) / std::sqrt(pi));
        r.alpha[3] = static_cast<double>((6.0L * pi - 75.0L / 4.0L) * s / q);
        r.alpha[4] = static_cast<double>((-189.0L * pi * pi + 315.0L * pi + 884.0L) / (7.0L * q * q));
        r.alpha[5] = static_cast<double>(
            (36.0L * pi * pi + 75.0L / 2.0L * pi - 105845.0L / 224.0L) * s / (q * q));
        r.alpha[6] = static_cast<double>(
            15.0L / 16016.0L *
            (-144144.0L * pi * pi * pi - 720720.0L * pi * pi + 3013725.0L * pi + 2120320.0L) /
            (q * q * q));
        r.alpha[7] = static_cast<double>(
            (162.0L * pi * pi * pi + 6615.0L / 4.0L * pi * pi - 103965.0L / 32.0L * pi -
             101897475.0L / 9152.0L) * s / (q * q * q));
        r.alpha[8] = static_cast<double>(
            3.0L / 2586584.0L *
            (-488864376.0L * pi * pi * pi * pi - 8147739600.0L * pi * pi * pi -
             455885430.0L * pi * pi + 86568885375.0L * pi + 32820007040.0L) /
            (q * q * q * q));
        r.alpha[9] = static_cast<double>(
            (648.0L * pi * pi * pi * pi + 15795.0L * pi * pi * pi + 591867.0L / 16.0L * pi * pi -
             461286225.0L / 2288.0L * pi - 188411947088175.0L / 662165504.0L) * s /
            (q * q * q * q));
        // reference decimals, not recomputed
        r.alpha[10] = 6498.233818;
        r.alpha[11] = 30389.98955;
        r.alpha[12] = 150516.4157;
        return r;
    }();
    return c;
}

}  // namespace treeheight
