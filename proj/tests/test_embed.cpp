#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "coprime/embed.hpp"
#include "coprime/errors.hpp"
#include "coprime/graph.hpp"
#include "oracles.hpp"

using namespace coprime;

namespace {

// Adjacency of the source must match gcd adjacency of the assigned labels;
// checked directly, and against the literal induced subgraph of the ambient
// PR graph when that graph is small enough to build.
void check_round_trip(const Graph& src, const embed::Embedding& emb) {
    REQUIRE(emb.source_order == src.order());
    CHECK(embed::verify_embedding(src, emb));

    for (int u = 0; u < src.order(); ++u)
        for (int v = u + 1; v < src.order(); ++v)
            CHECK(src.adjacent(u, v) ==
                  oracles::gcd_adjacent(emb.label_of[static_cast<std::size_t>(u)],
                                        emb.label_of[static_cast<std::size_t>(v)]));

    if (emb.ambient_n <= 10'000 && src.order() > 0) {
        auto ambient = build_pr(emb.ambient_n);
        auto induced = induced_subgraph(ambient, emb.label_of);
        REQUIRE(induced.order() == src.order());
        // induced sorts by label; map positions through the labeling
        for (int u = 0; u < src.order(); ++u)
            for (int v = u + 1; v < src.order(); ++v) {
                int iu = induced.position_of(emb.label_of[static_cast<std::size_t>(u)]);
                int iv = induced.position_of(emb.label_of[static_cast<std::size_t>(v)]);
                CHECK(induced.adjacent(iu, iv) == src.adjacent(u, v));
            }
    }
}

}  // namespace

TEST_CASE("embedding examples") {
    // two isolated vertices: personal primes only
    auto pair = oracles::make_edgeless(2);
    auto emb = embed::embed_graph(pair);
    CHECK(emb.label_of == std::vector<std::int64_t>{2, 3});
    CHECK(emb.ambient_n == 3);
    check_round_trip(pair, emb);

    // single edge: edge prime 2, personal primes 3 and 5
    auto k2 = oracles::make_complete(2);
    auto k2emb = embed::embed_graph(k2);
    CHECK(k2emb.label_of == std::vector<std::int64_t>{6, 10});
    CHECK(k2emb.ambient_n == 10);
    CHECK(std::gcd(std::int64_t{6}, std::int64_t{10}) == 2);
    check_round_trip(k2, k2emb);

    // path a-b-c: edge primes 2 and 3, personal primes 5, 7, 11
    auto path = oracles::from_edges(3, {{0, 1}, {1, 2}});
    auto pemb = embed::embed_graph(path);
    CHECK(pemb.label_of == std::vector<std::int64_t>{10, 42, 33});
    CHECK(pemb.ambient_n == 42);
    check_round_trip(path, pemb);

    // single vertex
    auto one = oracles::make_edgeless(1);
    auto oemb = embed::embed_graph(one);
    CHECK(oemb.label_of == std::vector<std::int64_t>{2});
    CHECK(embed::verify_embedding(one, oemb));
}

TEST_CASE("verify_embedding rejects bad labelings") {
    auto k2 = oracles::make_complete(2);
    embed::Embedding wrong;
    wrong.source_order = 2;
    wrong.label_of = {2, 3};   // coprime labels for an edge
    wrong.ambient_n = 3;
    CHECK(!embed::verify_embedding(k2, wrong));

    embed::Embedding dup;
    dup.source_order = 2;
    dup.label_of = {6, 6};
    dup.ambient_n = 6;
    CHECK(!embed::verify_embedding(k2, dup));

    embed::Embedding mismatch;
    mismatch.source_order = 3;
    mismatch.label_of = {2, 3, 5};
    CHECK_THROWS_AS(embed::verify_embedding(k2, mismatch), std::invalid_argument);
}

TEST_CASE("all 34 five-vertex graphs round-trip") {
    auto masks = oracles::nonisomorphic_edge_masks(5);
    CHECK(masks.size() == 34);
    for (auto mask : masks) {
        CAPTURE(mask);
        auto g = oracles::graph_from_edge_mask(5, mask);
        check_round_trip(g, embed::embed_graph(g));
    }
}

TEST_CASE("random graphs round-trip") {
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto g = oracles::random_graph(rng, n, 0.1 + 0.8 * (rng() % 1000) / 1000.0);
        CAPTURE(t);
        check_round_trip(g, embed::embed_graph(g));
    }
}

TEST_CASE("twin endpoints keep distinct labels") {
    // both endpoints of an isolated edge would collapse to the bare edge
    // prime without personal primes
    auto k2 = oracles::make_complete(2);
    auto emb = embed::embed_graph(k2);
    CHECK(emb.label_of[0] != emb.label_of[1]);
}

TEST_CASE("determinism") {
    std::mt19937 rng(23);
    auto g = oracles::random_graph(rng, 7, 0.5);
    auto a = embed::embed_graph(g);
    auto b = embed::embed_graph(g);
    CHECK(a.label_of == b.label_of);
}

TEST_CASE("overflow guard") {
    CHECK_THROWS_AS(embed::embed_graph(oracles::make_complete(12)), CapExceeded);
}
