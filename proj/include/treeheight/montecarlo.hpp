#pragma once

// Reproducible Monte Carlo over uniform random rooted labeled trees.
// Workers own seed-derived streams and accumulate exact integer power sums
// of the total height (orders 1..4); merges are associative and performed
// in worker order, so output depends only on (seed, workers).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "treeheight/moments.hpp"
#include "treeheight/oracle.hpp"
#include "treeheight/random.hpp"
#include "treeheight/rational.hpp"

namespace treeheight {

struct SampleStats {
    unsigned n = 0;
    std::uint64_t samples = 0;
    Integer s1, s2, s3, s4;  // exact power sums of total heights

    void add(std::uint64_t h) {
        ++samples;
        Integer hh(static_cast<unsigned long>(h));
        Integer h2 = hh * hh;
        s1 += hh;
        s2 += h2;
        s3 += h2 * hh;
        s4 += h2 * h2;
    }

    void merge(const SampleStats& o) {
        samples += o.samples;
        s1 += o.s1;
        s2 += o.s2;
        s3 += o.s3;
        s4 += o.s4;
    }

    // Exact sample central moments (denominator `samples`, not samples-1).
    Rational mean() const { return Rational(s1, Integer(samples)); }
    Rational central(unsigned k) const {
        if (samples == 0) throw std::domain_error("SampleStats: no samples");
        const Rational m = mean();
        const Rational r1 = Rational(s1, Integer(samples));
        const Rational r2 = Rational(s2, Integer(samples));
        const Rational r3 = Rational(s3, Integer(samples));
        const Rational r4 = Rational(s4, Integer(samples));
        switch (k) {
            case 2: return r2 - m * m;
            case 3: return r3 - Rational(3) * m * r2 + Rational(2) * m * m * m;
            case 4:
                return r4 - Rational(4) * m * r3 + Rational(6) * m * m * r2 -
                       Rational(3) * m * m * m * m;
            default: throw std::invalid_argument("SampleStats: central moment order 2..4");
        }
        (void)r1;
    }

    double variance() const { return central(2).to_double(); }
    double skewness() const {
        Rational v = central(2), m3 = central(3);
        Rational sq = (m3 * m3) / pow(v, 3);
        double s = std::sqrt(sq.to_double());
        return m3.sign() < 0 ? -s : s;
    }
    double kurtosis() const { return (central(4) / pow(central(2), 2)).to_double(); }

    double scaled_mean() const {
        return mean().to_double() / std::pow(static_cast<double>(n), 1.5);
    }

    // Classical large-sample standard errors.
    double se_mean() const { return std::sqrt(variance() / static_cast<double>(samples)); }
    double se_skewness() const { return std::sqrt(6.0 / static_cast<double>(samples)); }
    double se_kurtosis() const { return std::sqrt(24.0 / static_cast<double>(samples)); }
};

namespace detail {
// Fixed partition: worker i handles the i-th contiguous block.
inline std::vector<std::uint64_t> block_sizes(std::uint64_t samples, unsigned workers) {
    if (workers == 0) throw std::invalid_argument("workers must be >= 1");
    std::vector<std::uint64_t> sizes(workers);
    for (unsigned i = 0; i < workers; ++i)
        sizes[i] = samples / workers + (i < samples % workers ? 1 : 0);
    return sizes;
}
}  // namespace detail

// Total heights of `samples` uniform rooted trees, in deterministic order.
inline std::vector<std::uint64_t> sample_total_heights(unsigned n, std::uint64_t samples,
                                                       std::uint64_t seed, unsigned workers = 1) {
    if (n < 2) throw std::invalid_argument("sample_total_heights: n must be >= 2");
    auto sizes = detail::block_sizes(samples, workers);
    std::vector<std::vector<std::uint64_t>> blocks(workers);
    auto run = [&](unsigned w) {
        RandomStream rng = RandomStream::for_worker(seed, w);
        auto& out = blocks[w];
        out.reserve(sizes[w]);
        for (std::uint64_t i = 0; i < sizes[w]; ++i)
            out.push_back(total_height(sample_tree(n, rng)));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    std::vector<std::uint64_t> all;
    all.reserve(samples);
    for (auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
    return all;
}

inline SampleStats sample_stats(unsigned n, std::uint64_t samples, std::uint64_t seed,
                                unsigned workers = 1) {
    SampleStats total;
    total.n = n;
    for (std::uint64_t h : sample_total_heights(n, samples, seed, workers)) total.add(h);
    return total;
}

// Histogram of the scaled statistic X / n^{3/2}, auto-ranged over the
// sample, `bins` equal-width bins, half-open except the last.
struct Histogram {
    unsigned n = 0;
    std::uint64_t samples = 0;
    double lo = 0, hi = 0;
    std::vector<std::uint64_t> counts;

    double bin_width() const { return (hi - lo) / static_cast<double>(counts.size()); }
    double density(std::size_t i) const {
        return static_cast<double>(counts[i]) /
               (static_cast<double>(samples) * bin_width());
    }
    // Riemann mass of the density; 1 up to float rounding.
    double total_mass() const {
        double m = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) m += density(i) * bin_width();
        return m;
    }
};

inline Histogram scaled_height_histogram(unsigned n, std::uint64_t samples, std::uint64_t seed,
                                         unsigned workers = 1, unsigned bins = 100) {
    if (bins == 0) throw std::invalid_argument("scaled_height_histogram: bins must be >= 1");
    if (samples == 0) throw std::invalid_argument("scaled_height_histogram: no samples");
    auto heights = sample_total_heights(n, samples, seed, workers);
    const double scale = std::pow(static_cast<double>(n), 1.5);
    Histogram h;
    h.n = n;
    h.samples = samples;
    h.counts.assign(bins, 0);
    double lo = static_cast<double>(heights[0]) / scale;
    double hi = lo;
    for (std::uint64_t v : heights) {
        double x = static_cast<double>(v) / scale;
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    if (hi == lo) hi = lo + 1.0 / scale;  // degenerate sample; one nonempty bin
    h.lo = lo;
    h.hi = hi;
    const double width = (hi - lo) / bins;
    for (std::uint64_t v : heights) {
        double x = static_cast<double>(v) / scale;
        auto idx = static_cast<std::size_t>((x - lo) / width);
        if (idx >= bins) idx = bins - 1;
        ++h.counts[idx];
    }
    return h;
}

}  // namespace treeheight
