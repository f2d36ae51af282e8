#include "coprime/perfection.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "coprime/errors.hpp"

namespace coprime::perfection {

namespace {

// Induced-cycle DFS for one exact length L, canonical form: path[0] is the
// cycle's lowest position, path[1] < path[L-1]. Masks are over vertex
// positions, `words` 64-bit words each.
struct CycleSearch {
    int n = 0;
    int words = 0;
    int target = 0;                        // L
    std::vector<std::uint64_t> rows;       // adjacency rows
    std::vector<std::uint64_t> astack;     // avail mask per depth
    std::vector<int> path;
    const std::uint64_t* n0 = nullptr;     // row of the start vertex

    explicit CycleSearch(const Graph& g) : n(g.order()), words(g.words_per_row()) {
        rows.resize(static_cast<std::size_t>(n) * words);
        for (int u = 0; u < n; ++u) {
            auto r = g.row(u);
            std::copy(r.begin(), r.end(), rows.begin() + static_cast<std::size_t>(u) * words);
        }
    }

    const std::uint64_t* row(int u) const { return rows.data() + static_cast<std::size_t>(u) * words; }
    std::uint64_t* avail(int depth) { return astack.data() + static_cast<std::size_t>(depth) * words; }

    static bool test(const std::uint64_t* m, int v) { return (m[v / 64] >> (v % 64)) & 1u; }

    bool intersects(const std::uint64_t* a, const std::uint64_t* b) const {
        for (int w = 0; w < words; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }

    int popcount(const std::uint64_t* m) const {
        int c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(m[w]);
        return c;
    }

    // depth d = vertices placed so far; avail(d) holds vertices above the
    // start, unvisited, and non-adjacent to every interior vertex
    // path[1..d-2]. Adjacency to the start is tracked through n0: interior
    // candidates must avoid it, the closing vertex must hit it.
    bool dfs(int d) {
        const std::uint64_t* av = avail(d);
        if (!intersects(av, n0)) return false;       // cannot close the cycle
        if (popcount(av) < target - d) return false; // not enough vertices left

        int e = path[static_cast<std::size_t>(d) - 1];
        const std::uint64_t* re = row(e);

        if (d == target - 1) {
            // closing vertex: adjacent to both ends, above path[1]
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = av[w] & re[w] & n0[w];
                while (bits) {
                    int c = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (c <= path[1]) continue;
                    path[static_cast<std::size_t>(d)] = c;
                    return true;
                }
            }
            return false;
        }

        // e becomes interior once the path moves past it, so the deeper
        // avail drops N(e); the chosen vertex is cleared per candidate and
        // restored after the recursive call.
        std::uint64_t* next = avail(d + 1);
        if (d >= 2) {
            for (int x = 0; x < words; ++x) next[x] = av[x] & ~re[x];
        } else {
            std::copy(av, av + words, next);
        }
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = av[w] & re[w];
            if (d >= 2) bits &= ~n0[w];   // interior vertices stay clear of the start
            while (bits) {
                int c = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                std::uint64_t saved = next[c / 64];
                next[c / 64] &= ~(1ull << (c % 64));
                path[static_cast<std::size_t>(d)] = c;
                if (dfs(d + 1)) return true;
                next[c / 64] = saved;
            }
        }
        return false;
    }

    // First (canonical) induced cycle of exactly `length` vertices, as
    // positions in cyclic order; empty when none exists.
    std::vector<int> find(int length) {
        target = length;
        path.assign(static_cast<std::size_t>(length), -1);
        astack.assign(static_cast<std::size_t>(length + 1) * words, 0);
        for (int s = 0; s + length <= n; ++s) {
            path[0] = s;
            n0 = row(s);
            std::uint64_t* av = avail(1);
            for (int w = 0; w < words; ++w) av[w] = 0;
            for (int v = s + 1; v < n; ++v) av[v / 64] |= 1ull << (v % 64);
            if (dfs(1)) return path;
        }
        return {};
    }
};

int clamp_bound(const Graph& g, int max_length) {
    int n = g.order();
    int bound = (max_length < 0 || max_length > n) ? n : max_length;
    if (bound % 2 == 0) --bound;
    return bound;
}

std::optional<HoleCertificate> search_holes(const Graph& g, int max_length, int vertex_cap,
                                            HoleKind kind) {
    if (g.order() > vertex_cap)
        throw CapExceeded("perfection: graph has " + std::to_string(g.order()) +
                          " vertices, over the hole-search cap " + std::to_string(vertex_cap));
    int bound = clamp_bound(g, max_length);
    if (bound < 5) return std::nullopt;

    CycleSearch search(g);
    for (int length = 5; length <= bound; length += 2) {
        auto cycle = search.find(length);
        if (cycle.empty()) continue;
        HoleCertificate cert;
        cert.kind = kind;
        cert.cycle.reserve(cycle.size());
        for (int pos : cycle) cert.cycle.push_back(g.label(pos));
        return cert;
    }
    return std::nullopt;
}

}  // namespace

std::optional<HoleCertificate> find_odd_hole(const Graph& g, int max_length, int vertex_cap) {
    return search_holes(g, max_length, vertex_cap, HoleKind::hole);
}

std::optional<HoleCertificate> find_odd_antihole(const Graph& g, int max_length, int vertex_cap) {
    return search_holes(complement(g), max_length, vertex_cap, HoleKind::antihole);
}

BergeReport berge_check(const Graph& g, int max_length, int vertex_cap) {
    BergeReport report;
    report.bound = clamp_bound(g, max_length);
    report.certificate = find_odd_hole(g, max_length, vertex_cap);
    if (!report.certificate) report.certificate = find_odd_antihole(g, max_length, vertex_cap);
    report.is_berge_up_to_bound = !report.certificate.has_value();
    return report;
}

}  // namespace coprime::perfection
