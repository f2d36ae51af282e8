#include "coprime/embed.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coprime/errors.hpp"
#include "coprime/numbertheory.hpp"

namespace coprime::embed {

namespace {

std::vector<std::int64_t> first_primes(std::size_t count) {
    std::int64_t limit = 64;
    while (true) {
        auto primes = nt::sieve_primes(limit, std::numeric_limits<std::int64_t>::max());
        if (primes.size() >= count) {
            primes.resize(count);
            return primes;
        }
        limit *= 2;
    }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 wide = static_cast<__int128>(a) * b;
    if (wide > std::numeric_limits<std::int64_t>::max())
        throw CapExceeded("embed: label exceeds the native 64-bit range; the graph is too large");
    return static_cast<std::int64_t>(wide);
}

}  // namespace

Embedding embed_graph(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) edges.emplace_back(u, v);

    auto primes = first_primes(edges.size() + static_cast<std::size_t>(n));

    Embedding emb;
    emb.source_order = n;
    emb.label_of.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        emb.label_of[static_cast<std::size_t>(v)] = primes[edges.size() + static_cast<std::size_t>(v)];
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        emb.label_of[static_cast<std::size_t>(u)] = checked_mul(emb.label_of[static_cast<std::size_t>(u)], primes[e]);
        emb.label_of[static_cast<std::size_t>(v)] = checked_mul(emb.label_of[static_cast<std::size_t>(v)], primes[e]);
    }
    emb.ambient_n = n == 0 ? 0 : *std::max_element(emb.label_of.begin(), emb.label_of.end());
    return emb;
}

bool verify_embedding(const Graph& g, const Embedding& e) {
    if (e.source_order != g.order() ||
        e.label_of.size() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("embed: embedding size does not match the graph");

    int n = g.order();
    for (int u = 0; u < n; ++u) {
        if (e.label_of[static_cast<std::size_t>(u)] < 2) return false;
        for (int v = u + 1; v < n; ++v) {
            std::int64_t a = e.label_of[static_cast<std::size_t>(u)];
            std::int64_t b = e.label_of[static_cast<std::size_t>(v)];
            if (a == b) return false;
            bool share = std::gcd(a, b) > 1;
            if (share != g.adjacent(u, v)) return false;
        }
    }
    return true;
}

}  // namespace coprime::embed
