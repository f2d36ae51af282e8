#pragma once

// PR[n]/RP[n] construction, complements, induced subgraphs, DIMACS/JSON io.
//
// PR[n]: vertices 2..n, edges between integers sharing a factor > 1.
// RP[n]: same vertices, edges between coprime integers (complement of PR[n]).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace coprime {

// Largest n accepted by build_pr/build_rp; the dense bitset adjacency is
// n^2 bits, so this guards memory, not math.
inline constexpr std::int64_t kGraphBuildCap = 50'000;

// Vertex-labeled undirected simple graph with bitset adjacency.
// Labels are strictly increasing; the adjacency matrix is indexed by vertex
// position, so position order equals label order. Immutable once built
// (add_edge is for the construction phase only).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::int64_t> labels);

    int order() const { return static_cast<int>(labels_.size()); }
    std::int64_t edge_count() const { return edges_; }

    std::int64_t label(int pos) const { return labels_[static_cast<std::size_t>(pos)]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    // Position of a label, or -1 when absent.
    int position_of(std::int64_t label) const;
    bool has_label(std::int64_t label) const { return position_of(label) >= 0; }

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);   // positions; no-op on duplicates, rejects loops
    int degree(int pos) const;

    // Bitset row for a vertex position (words_per_row() 64-bit words).
    std::span<const std::uint64_t> row(int pos) const;
    int words_per_row() const { return words_; }

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && bits_ == other.bits_;
    }

private:
    std::vector<std::int64_t> labels_;
    std::vector<std::uint64_t> bits_;
    int words_ = 0;
    std::int64_t edges_ = 0;
};

// PR[n] on vertices 2..n; adjacency iff gcd > 1. Built by unioning, per prime
// p <= n/2, the clique on multiples of p. Throws std::domain_error for n < 2.
Graph build_pr(std::int64_t n);

// RP[n] = complement(PR[n]); adjacency iff gcd = 1.
Graph build_rp(std::int64_t n);

// Same labels, complemented edge set. Involution.
Graph complement(const Graph& g);

// Restriction to a subset of labels. Throws std::invalid_argument on labels
// not in g (or duplicates).
Graph induced_subgraph(const Graph& g, std::span<const std::int64_t> labels);

// DIMACS edge format with `c label <pos> <label>` comment lines carrying the
// integer labels (1-based positions). import accepts files without label
// comments and falls back to labels 1..n.
std::string export_dimacs(const Graph& g);
Graph import_dimacs(const std::string& text);

// {"labels": [...], "edges": [[a, b], ...]} with edges as label pairs.
std::string export_json(const Graph& g);
Graph import_json(const std::string& text);

}  // namespace coprime
