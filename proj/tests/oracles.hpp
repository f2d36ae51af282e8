#pragma once

// Test-only oracles, independent of the library code paths they check:
// trial division for the sieve, pairwise gcd for PR adjacency, exhaustive
// enumeration for alpha, plus small deterministic graph generators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "coprime/graph.hpp"

namespace oracles {

inline bool trial_division_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> trial_division_primes(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 2; v <= n; ++v)
        if (trial_division_prime(v)) out.push_back(v);
    return out;
}

inline bool gcd_adjacent(std::int64_t a, std::int64_t b) { return std::gcd(a, b) > 1; }

// Exact alpha by exhaustive choose/skip recursion over the lowest active
// vertex. No bounds, no branching heuristics: a different algorithm from the
// branch-and-bound solver it cross-checks. Graphs up to 64 vertices.
class ExhaustiveAlpha {
public:
    explicit ExhaustiveAlpha(const coprime::Graph& g) : n_(g.order()), nbr_(static_cast<std::size_t>(n_), 0) {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v && g.adjacent(u, v)) nbr_[static_cast<std::size_t>(u)] |= 1ull << v;
    }

    int alpha() const {
        std::uint64_t all = n_ == 64 ? ~0ull : ((1ull << n_) - 1);
        return recurse(all);
    }

private:
    int recurse(std::uint64_t active) const {
        if (active == 0) return 0;
        int v = std::countr_zero(active);
        std::uint64_t bit = 1ull << v;
        int skip = recurse(active & ~bit);
        int take = 1 + recurse(active & ~bit & ~nbr_[static_cast<std::size_t>(v)]);
        return std::max(skip, take);
    }

    int n_;
    std::vector<std::uint64_t> nbr_;
};

// --------------------------- graph constructors ---------------------------

inline coprime::Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::int64_t> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i + 1);
    coprime::Graph g(std::move(labels));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline coprime::Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_edges(n, edges);
}

inline coprime::Graph make_edgeless(int n) { return from_edges(n, {}); }

inline coprime::Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return from_edges(n, edges);
}

// Deterministic G(n, p)-style generator. Raw engine draws keep the corpus
// identical across standard library implementations.
inline coprime::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    const double scale = static_cast<double>(std::mt19937::max()) + 1.0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng()) / scale < p) edges.emplace_back(u, v);
    return from_edges(n, edges);
}

// All graphs on `n` vertices up to isomorphism (n <= 6), as edge bitmasks
// over the C(n,2) vertex pairs, canonicalized by brute force over all vertex
// permutations. There are 34 such graphs for n = 5.
inline std::vector<std::uint32_t> nonisomorphic_edge_masks(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int m = static_cast<int>(pairs.size());

    std::vector<int> pair_index(static_cast<std::size_t>(n) * n, -1);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = pairs[static_cast<std::size_t>(e)];
        pair_index[static_cast<std::size_t>(u) * n + v] = e;
        pair_index[static_cast<std::size_t>(v) * n + u] = e;
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> canonical;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::uint32_t best = ~0u;
        for (const auto& pm : perms) {
            std::uint32_t mapped = 0;
            for (int e = 0; e < m; ++e) {
                if (!(mask & (1u << e))) continue;
                auto [u, v] = pairs[static_cast<std::size_t>(e)];
                mapped |= 1u << pair_index[static_cast<std::size_t>(pm[static_cast<std::size_t>(u)]) * n +
                                           pm[static_cast<std::size_t>(v)]];
            }
            best = std::min(best, mapped);
        }
        canonical.insert(best);
    }
    return {canonical.begin(), canonical.end()};
}

inline coprime::Graph graph_from_edge_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    int e = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++e)
            if (mask & (1u << e)) edges.emplace_back(u, v);
    return from_edges(n, edges);
}

}  // namespace oracles
