#pragma once

// Exact maximum independent set and greedy clique covers.

#include <cstdint>
#include <span>
#include <vector>

#include "coprime/graph.hpp"

namespace coprime::mis {

inline constexpr int kDefaultVertexCap = 200;

struct MISResult {
    int alpha = 0;
    std::vector<std::int64_t> witness;   // pairwise non-adjacent, |witness| = alpha
    std::uint64_t search_nodes = 0;      // branch-and-bound nodes explored
};

// Exact alpha(G) by branch and bound: branch on a maximum-degree vertex
// (include/exclude, lowest label on ties), prune with a greedy clique cover
// recomputed on the residual graph at every node. Deterministic.
// Throws CapExceeded when |V(G)| > vertex_cap.
MISResult max_independent_set(const Graph& g, int vertex_cap = kDefaultVertexCap);

// True iff no two of the given labels are adjacent. Throws
// std::invalid_argument on labels not in g.
bool verify_independent(const Graph& g, std::span<const std::int64_t> labels);

// Partition of V(G) into cliques, grown greedily in ascending label order.
// Any cover upper-bounds alpha; on PR[n] this one has exactly pi(n) parts
// (each clique collects the remaining multiples of its smallest member's
// smallest prime factor).
std::vector<std::vector<std::int64_t>> greedy_clique_cover(const Graph& g);

}  // namespace coprime::mis
