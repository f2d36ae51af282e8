#pragma once

// Constructive embedding of an arbitrary graph as an induced subgraph of
// PR[n]: every graph appears once the labels are chosen well.

#include <cstdint>
#include <vector>

#include "coprime/graph.hpp"

namespace coprime::embed {

struct Embedding {
    int source_order = 0;
    std::vector<std::int64_t> label_of;   // per source vertex position
    std::int64_t ambient_n = 0;           // max label
};

// Assigns a distinct fresh prime to every edge and a distinct personal prime
// to every vertex (edges in lexicographic position order take the smallest
// primes, then vertices in position order); a vertex's label is its personal
// prime times the product of its incident edge primes. Adjacent vertices
// then share exactly their edge prime, non-adjacent labels are coprime, and
// personal primes keep labels distinct even for twin endpoints.
// Throws CapExceeded when a label would overflow a signed 64-bit integer.
Embedding embed_graph(const Graph& g);

// Both embedding invariants, checked by gcd over all pairs. Throws
// std::invalid_argument when the sizes disagree.
bool verify_embedding(const Graph& g, const Embedding& e);

}  // namespace coprime::embed
