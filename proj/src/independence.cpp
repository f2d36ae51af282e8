#include "coprime/independence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "coprime/errors.hpp"

namespace coprime::mis {

namespace {

// Bitmask view of the graph plus the branch-and-bound state. All masks are
// `words` 64-bit words over vertex positions.
struct Solver {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;     // closed under construction: row u = N(u)
    std::vector<std::uint64_t> scratch;  // clique-cover workspace
    std::vector<int> best;               // best independent set found (positions)
    std::vector<int> current;
    std::uint64_t nodes = 0;

    explicit Solver(const Graph& g) : n(g.order()), words(g.words_per_row()) {
        rows.resize(static_cast<std::size_t>(n) * words);
        for (int u = 0; u < n; ++u) {
            auto r = g.row(u);
            std::copy(r.begin(), r.end(), rows.begin() + static_cast<std::size_t>(u) * words);
        }
        scratch.resize(static_cast<std::size_t>(2) * words);
    }

    const std::uint64_t* row(int u) const { return rows.data() + static_cast<std::size_t>(u) * words; }

    static int popcount(const std::uint64_t* m, int words) {
        int c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(m[w]);
        return c;
    }

    int degree_in(const std::uint64_t* mask, int u) const {
        const std::uint64_t* r = row(u);
        int d = 0;
        for (int w = 0; w < words; ++w) d += std::popcount(r[w] & mask[w]);
        return d;
    }

    // Number of cliques in the greedy sequential cover of `mask`
    // (ascending position order). Upper-bounds alpha on the residual graph.
    // When the seed u is the lowest uncovered vertex, every candidate is > u,
    // so taking the lowest candidate bit repeatedly grows the clique in
    // ascending order; intersecting with each new member's row only clears
    // bits, which keeps the scan monotone.
    int cover_count(const std::uint64_t* mask) {
        std::uint64_t* left = scratch.data();
        std::uint64_t* cand = scratch.data() + words;
        std::copy(mask, mask + words, left);
        int cliques = 0;
        for (int w = 0; w < words; ++w) {
            while (left[w]) {
                int u = w * 64 + std::countr_zero(left[w]);
                ++cliques;
                left[w] &= left[w] - 1;
                for (int x = 0; x < words; ++x) cand[x] = left[x] & row(u)[x];
                for (int x = w; x < words; ++x) {
                    while (cand[x]) {
                        int v = x * 64 + std::countr_zero(cand[x]);
                        left[x] &= ~(1ull << (v % 64));
                        for (int y = 0; y < words; ++y) cand[y] &= row(v)[y];
                    }
                }
            }
        }
        return cliques;
    }

    // Greedy independent set (repeatedly take a minimum-degree vertex, lowest
    // label on ties, and delete its closed neighborhood). Seeds the bound.
    std::vector<int> greedy_independent(const std::uint64_t* mask0) {
        std::vector<std::uint64_t> mask(mask0, mask0 + words);
        std::vector<int> out;
        while (true) {
            int bestv = -1, bestd = n + 1;
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = mask[w];
                while (bits) {
                    int u = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    int d = degree_in(mask.data(), u);
                    if (d < bestd) {
                        bestd = d;
                        bestv = u;
                    }
                }
            }
            if (bestv < 0) break;
            out.push_back(bestv);
            const std::uint64_t* r = row(bestv);
            for (int w = 0; w < words; ++w) mask[w] &= ~r[w];
            mask[bestv / 64] &= ~(1ull << (bestv % 64));
        }
        return out;
    }

    void search(std::vector<std::uint64_t>& mask, int active) {
        ++nodes;
        if (active == 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        int bound = static_cast<int>(current.size()) + cover_count(mask.data());
        if (bound <= static_cast<int>(best.size())) return;

        // branch vertex: maximum degree in the residual graph, lowest position on ties
        int bv = -1, bd = -1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                int u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                int d = degree_in(mask.data(), u);
                if (d > bd) {
                    bd = d;
                    bv = u;
                }
            }
        }

        // include bv
        std::vector<std::uint64_t> sub(mask);
        const std::uint64_t* r = row(bv);
        for (int w = 0; w < words; ++w) sub[w] &= ~r[w];
        sub[bv / 64] &= ~(1ull << (bv % 64));
        current.push_back(bv);
        search(sub, popcount(sub.data(), words));
        current.pop_back();

        // exclude bv
        mask[bv / 64] &= ~(1ull << (bv % 64));
        search(mask, active - 1);
        mask[bv / 64] |= 1ull << (bv % 64);
    }
};

}  // namespace

MISResult max_independent_set(const Graph& g, int vertex_cap) {
    if (g.order() > vertex_cap)
        throw CapExceeded("independence: graph has " + std::to_string(g.order()) +
                          " vertices, over the solver cap " + std::to_string(vertex_cap));
    MISResult res;
    if (g.order() == 0) return res;

    Solver s(g);
    std::vector<std::uint64_t> full(static_cast<std::size_t>(s.words), 0);
    for (int u = 0; u < s.n; ++u) full[u / 64] |= 1ull << (u % 64);

    s.best = s.greedy_independent(full.data());
    std::sort(s.best.begin(), s.best.end());
    s.search(full, s.n);

    res.alpha = static_cast<int>(s.best.size());
    res.search_nodes = s.nodes;
    std::sort(s.best.begin(), s.best.end());
    for (int u : s.best) res.witness.push_back(g.label(u));
    return res;
}

bool verify_independent(const Graph& g, std::span<const std::int64_t> labels) {
    std::vector<int> pos;
    pos.reserve(labels.size());
    for (auto lab : labels) {
        int p = g.position_of(lab);
        if (p < 0) throw std::invalid_argument("independence: unknown label " + std::to_string(lab));
        pos.push_back(p);
    }
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (g.adjacent(pos[i], pos[j])) return false;
    return true;
}

std::vector<std::vector<std::int64_t>> greedy_clique_cover(const Graph& g) {
    int n = g.order();
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    std::vector<std::vector<std::int64_t>> cover;
    for (int u = 0; u < n; ++u) {
        if (covered[static_cast<std::size_t>(u)]) continue;
        std::vector<int> clique{u};
        covered[static_cast<std::size_t>(u)] = true;
        for (int v = u + 1; v < n; ++v) {
            if (covered[static_cast<std::size_t>(v)]) continue;
            bool fits = true;
            for (int c : clique)
                if (!g.adjacent(c, v)) {
                    fits = false;
                    break;
                }
            if (fits) {
                clique.push_back(v);
                covered[static_cast<std::size_t>(v)] = true;
            }
        }
        std::vector<std::int64_t> labels;
        labels.reserve(clique.size());
        for (int c : clique) labels.push_back(g.label(c));
        cover.push_back(std::move(labels));
    }
    return cover;
}

}  // namespace coprime::mis
