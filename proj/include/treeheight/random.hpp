#pragma once

// Deterministic random streams. Worker streams are derived from
// (seed, worker index) by a fixed splitmix64 rule, so runs are reproducible
// for a given (seed, worker count) regardless of scheduling.

#include <cstdint>
#include <random>

namespace treeheight {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    static RandomStream for_worker(std::uint64_t seed, unsigned worker) {
        return RandomStream(splitmix64(seed) ^ splitmix64(0x51a7b031u + worker));
    }

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound) by rejection; avoids the implementation-defined
    // std::uniform_int_distribution so streams are portable.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace treeheight
