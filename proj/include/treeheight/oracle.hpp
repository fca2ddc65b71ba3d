#pragma once

// Ground truth by exhaustion. Labeled trees are enumerated through their
// Prüfer sequences (every sequence decodes to a tree, so the count identity
// n^{n-2} sequences x n roots = n^{n-1} rooted trees is structural), total
// heights are read off parent maps, and the same decoding gives a uniform
// random sampler.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treeheight/random.hpp"
#include "treeheight/rational.hpp"

namespace treeheight {

// Labeled tree with a distinguished root, stored as a parent map.
// Labels are 1..n; parent[root] == 0.
struct RootedTree {
    unsigned n = 0;
    unsigned root = 0;
    std::vector<unsigned> parent;  // size n+1, index 0 unused
};

// Enumeration guard: 8^7 ~ 2.1M trees is seconds-scale; n = 9 (~43M) is
// permitted only behind an explicit override.
inline constexpr unsigned kMaxOracleSize = 8;
inline constexpr unsigned kMaxOracleSizeUnlocked = 9;

namespace detail {
inline void check_oracle_bound(unsigned n, bool allow_large) {
    const unsigned bound = allow_large ? kMaxOracleSizeUnlocked : kMaxOracleSize;
    if (n < 1 || n > bound)
        throw std::out_of_range(
            "oracle enumeration supports 1 <= n <= " + std::to_string(bound) +
            (allow_large ? "" : " (n = 9 needs the allow-large override)") +
            "; got n = " + std::to_string(n));
}
}  // namespace detail

// Standard linear-time Prüfer decode: repeatedly attach the smallest
// current leaf to the next sequence entry; the final edge joins the last
// leaf to vertex n. Bijective from sequences in {1..n}^{n-2} to labeled
// trees on n >= 2 vertices.
inline std::vector<std::pair<unsigned, unsigned>> prufer_decode(
    const std::vector<unsigned>& seq, unsigned n) {
    if (n < 2) throw std::invalid_argument("prufer_decode: n must be >= 2");
    if (seq.size() != n - 2)
        throw std::invalid_argument("prufer_decode: sequence length must be n-2 = " +
                                    std::to_string(n - 2) + ", got " +
                                    std::to_string(seq.size()));
    std::vector<unsigned> degree(n + 1, 1);
    for (unsigned v : seq) {
        if (v < 1 || v > n)
            throw std::invalid_argument("prufer_decode: label " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        ++degree[v];
    }
    std::vector<std::pair<unsigned, unsigned>> edges;
    edges.reserve(n - 1);
    unsigned ptr = 1;
    while (degree[ptr] != 1) ++ptr;
    unsigned leaf = ptr;
    for (unsigned v : seq) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n);
    return edges;
}

// Inverse of prufer_decode (smallest-leaf-first elimination).
inline std::vector<unsigned> prufer_encode(const std::vector<std::pair<unsigned, unsigned>>& edges,
                                           unsigned n) {
    if (n < 2) throw std::invalid_argument("prufer_encode: n must be >= 2");
    if (edges.size() != n - 1) throw std::invalid_argument("prufer_encode: need n-1 edges");
    std::vector<std::vector<unsigned>> adj(n + 1);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<unsigned> degree(n + 1);
    for (unsigned v = 1; v <= n; ++v) degree[v] = static_cast<unsigned>(adj[v].size());
    std::vector<bool> removed(n + 1, false);
    std::vector<unsigned> seq;
    seq.reserve(n - 2);
    unsigned ptr = 1;
    while (degree[ptr] != 1) ++ptr;
    unsigned leaf = ptr;
    for (unsigned step = 0; step + 2 < n; ++step) {
        removed[leaf] = true;
        unsigned neighbor = 0;
        for (unsigned u : adj[leaf])
            if (!removed[u]) {
                neighbor = u;
                break;
            }
        seq.push_back(neighbor);
        if (--degree[neighbor] == 1 && neighbor < ptr) {
            leaf = neighbor;
        } else {
            ++ptr;
            while (degree[ptr] != 1 || removed[ptr]) ++ptr;
            leaf = ptr;
        }
    }
    return seq;
}

namespace detail {
// Orient an edge list away from `root`, producing the parent map.
inline RootedTree orient(unsigned n, unsigned root,
                         const std::vector<std::pair<unsigned, unsigned>>& edges) {
    RootedTree t;
    t.n = n;
    t.root = root;
    t.parent.assign(n + 1, 0);
    std::vector<std::vector<unsigned>> adj(n + 1);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<unsigned> stack{root};
    std::vector<bool> seen(n + 1, false);
    seen[root] = true;
    while (!stack.empty()) {
        unsigned u = stack.back();
        stack.pop_back();
        for (unsigned v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                t.parent[v] = u;
                stack.push_back(v);
            }
    }
    return t;
}
}  // namespace detail

// Sum of distances to the root (the root contributes 0). Depths are
// memoized along parent chains, so the walk is linear.
inline std::uint64_t total_height(const RootedTree& t) {
    if (t.n == 0 || t.root < 1 || t.root > t.n)
        throw std::invalid_argument("total_height: malformed tree");
    std::vector<std::int64_t> depth(t.n + 1, -1);
    depth[t.root] = 0;
    std::uint64_t sum = 0;
    std::vector<unsigned> chain;
    for (unsigned v = 1; v <= t.n; ++v) {
        unsigned u = v;
        chain.clear();
        while (depth[u] < 0) {
            chain.push_back(u);
            u = t.parent[u];
            if (u == 0 || chain.size() > t.n)
                throw std::invalid_argument("total_height: parent map is not a rooted tree");
        }
        std::int64_t d = depth[u];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
        sum += static_cast<std::uint64_t>(depth[v]);
    }
    return sum;
}

// Visits every rooted labeled tree on n vertices exactly once
// (all Prüfer sequences x all roots); n^{n-1} trees in total.
template <typename Visitor>
void for_each_rooted_tree(unsigned n, Visitor&& visit, bool allow_large = false) {
    detail::check_oracle_bound(n, allow_large);
    if (n == 1) {
        RootedTree t;
        t.n = 1;
        t.root = 1;
        t.parent.assign(2, 0);
        visit(t);
        return;
    }
    std::vector<unsigned> seq(n - 2, 1);
    for (;;) {
        auto edges = prufer_decode(seq, n);
        for (unsigned root = 1; root <= n; ++root) visit(detail::orient(n, root, edges));
        // odometer over {1..n}^{n-2}
        std::size_t pos = 0;
        while (pos < seq.size() && seq[pos] == n) seq[pos++] = 1;
        if (pos == seq.size()) break;
        ++seq[pos];
    }
}

// Exact distribution of total height: counts[h] = number of rooted labeled
// trees on n vertices with total height h. Equals the coefficient list of
// the weight enumerator J_n(y).
struct HeightDistribution {
    unsigned n = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    Integer total() const {
        Integer t = 0;
        for (const auto& [h, c] : counts) t += static_cast<unsigned long>(c);
        return t;
    }
};

inline HeightDistribution exact_distribution(unsigned n, bool allow_large = false) {
    HeightDistribution dist;
    dist.n = n;
    for_each_rooted_tree(
        n, [&](const RootedTree& t) { ++dist.counts[total_height(t)]; }, allow_large);
    return dist;
}

// Uniform over all n^{n-1} rooted labeled trees: uniform Prüfer sequence
// plus an independent uniform root.
inline RootedTree sample_tree(unsigned n, RandomStream& rng) {
    if (n < 2) throw std::invalid_argument("sample_tree: n must be >= 2");
    std::vector<unsigned> seq(n - 2);
    for (auto& v : seq) v = static_cast<unsigned>(rng.below(n)) + 1;
    unsigned root = static_cast<unsigned>(rng.below(n)) + 1;
    return detail::orient(n, root, prufer_decode(seq, n));
}

}  // namespace treeheight
