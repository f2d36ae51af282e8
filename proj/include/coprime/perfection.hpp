#pragma once

// Odd hole and odd antihole search; Berge certification at desk scale.

#include <cstdint>
#include <optional>
#include <vector>

#include "coprime/graph.hpp"

namespace coprime::perfection {

inline constexpr int kDefaultHoleVertexCap = 40;

enum class HoleKind { hole, antihole };

struct HoleCertificate {
    std::vector<std::int64_t> cycle;   // cyclic order, odd length >= 5
    HoleKind kind = HoleKind::hole;
};

// Smallest induced odd cycle of length in [5, max_length], or nullopt.
// Exhaustive DFS over induced paths, searching by increasing length, with
// canonical-start pruning: the cycle starts at its lowest label and the
// second vertex is below the last, so each hole is generated exactly once
// and the returned certificate is deterministic. max_length is clamped to
// the largest odd value <= |V(G)|. Throws CapExceeded when |V(G)| >
// vertex_cap (the search is exponential; the cap keeps it at desk scale).
std::optional<HoleCertificate> find_odd_hole(const Graph& g, int max_length,
                                             int vertex_cap = kDefaultHoleVertexCap);

// find_odd_hole on the complement, reported with kind = antihole.
std::optional<HoleCertificate> find_odd_antihole(const Graph& g, int max_length,
                                                 int vertex_cap = kDefaultHoleVertexCap);

struct BergeReport {
    bool is_berge_up_to_bound = false;
    std::optional<HoleCertificate> certificate;
    int bound = 0;   // the odd bound actually searched
};

// No odd hole and no odd antihole of length <= max_length. Pass max_length <
// 0 (or >= |V|) for the full bound |V| rounded down to odd, which decides
// Berge-ness and hence perfection.
BergeReport berge_check(const Graph& g, int max_length = -1,
                        int vertex_cap = kDefaultHoleVertexCap);

}  // namespace coprime::perfection
