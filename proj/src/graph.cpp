#include "coprime/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "coprime/errors.hpp"
#include "coprime/numbertheory.hpp"

namespace coprime {

Graph::Graph(std::vector<std::int64_t> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i - 1] >= labels_[i])
            throw std::invalid_argument("graph: vertex labels must be strictly increasing");
    words_ = (order() + 63) / 64;
    bits_.assign(static_cast<std::size_t>(order()) * words_, 0);
}

int Graph::position_of(std::int64_t label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

bool Graph::adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::invalid_argument("graph: edge endpoint out of range");
    if (adjacent(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    ++edges_;
}

int Graph::degree(int pos) const {
    int d = 0;
    for (auto w : row(pos)) d += std::popcount(w);
    return d;
}

std::span<const std::uint64_t> Graph::row(int pos) const {
    return {bits_.data() + static_cast<std::size_t>(pos) * words_,
            static_cast<std::size_t>(words_)};
}

Graph build_pr(std::int64_t n) {
    if (n < 2) throw std::domain_error("graph: PR[n] needs n >= 2, got " + std::to_string(n));
    if (n > kGraphBuildCap)
        throw CapExceeded("graph: n = " + std::to_string(n) + " exceeds the graph build cap " +
                          std::to_string(kGraphBuildCap));

    std::vector<std::int64_t> labels;
    labels.reserve(static_cast<std::size_t>(n) - 1);
    for (std::int64_t v = 2; v <= n; ++v) labels.push_back(v);
    Graph g(std::move(labels));

    // Union of cliques: all multiples of a prime p are pairwise adjacent, and
    // two integers share an edge iff some prime divides both.
    auto table = nt::FactorTable::build(n);
    std::vector<int> multiples;
    for (std::int64_t p : table.primes()) {
        if (p * 2 > n) break;
        multiples.clear();
        for (std::int64_t m = p; m <= n; m += p)
            multiples.push_back(static_cast<int>(m - 2));
        for (std::size_t i = 0; i < multiples.size(); ++i)
            for (std::size_t j = i + 1; j < multiples.size(); ++j)
                g.add_edge(multiples[i], multiples[j]);
    }
    return g;
}

Graph build_rp(std::int64_t n) {
    return complement(build_pr(n));
}

Graph complement(const Graph& g) {
    Graph c(g.labels());
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, std::span<const std::int64_t> labels) {
    std::vector<std::int64_t> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> positions;
    positions.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("graph: duplicate label " + std::to_string(sorted[i]) +
                                        " in induced subgraph request");
        int pos = g.position_of(sorted[i]);
        if (pos < 0)
            throw std::invalid_argument("graph: unknown label " + std::to_string(sorted[i]));
        positions.push_back(pos);
    }

    Graph s(std::move(sorted));
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j)
            if (g.adjacent(positions[i], positions[j]))
                s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

std::string export_dimacs(const Graph& g) {
    std::ostringstream out;
    int n = g.order();
    for (int pos = 0; pos < n; ++pos)
        out << "c label " << pos + 1 << ' ' << g.label(pos) << '\n';
    out << "p edge " << n << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph import_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, std::int64_t>> label_lines;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") {
            std::string tag;
            if (ls >> tag && tag == "label") {
                int pos;
                std::int64_t lab;
                if (!(ls >> pos >> lab))
                    throw std::invalid_argument("graph: malformed DIMACS label comment: " + line);
                label_lines.emplace_back(pos, lab);
            }
        } else if (head == "p") {
            std::string fmt;
            std::int64_t m;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                throw std::invalid_argument("graph: malformed DIMACS problem line: " + line);
        } else if (head == "e") {
            int u, v;
            if (!(ls >> u >> v))
                throw std::invalid_argument("graph: malformed DIMACS edge line: " + line);
            edges.emplace_back(u, v);
        }
    }
    if (n < 0) throw std::invalid_argument("graph: DIMACS input has no problem line");

    std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
    if (label_lines.empty()) {
        for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    } else {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (auto [pos, lab] : label_lines) {
            if (pos < 1 || pos > n)
                throw std::invalid_argument("graph: DIMACS label position out of range");
            seen[static_cast<std::size_t>(pos) - 1] = true;
            labels[static_cast<std::size_t>(pos) - 1] = lab;
        }
        for (bool s : seen)
            if (!s) throw std::invalid_argument("graph: DIMACS label comments do not cover all vertices");
    }

    Graph g(std::move(labels));  // validates strict increase
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n)
            throw std::invalid_argument("graph: DIMACS edge endpoint out of range");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

std::string export_json(const Graph& g) {
    nlohmann::json j;
    j["labels"] = g.labels();
    auto edges = nlohmann::json::array();
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) edges.push_back({g.label(u), g.label(v)});
    j["edges"] = std::move(edges);
    return j.dump(2);
}

Graph import_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        if (!j.contains("labels") || !j.contains("edges"))
            throw std::invalid_argument("graph: JSON graph needs \"labels\" and \"edges\"");

        std::vector<std::int64_t> labels;
        for (const auto& lab : j["labels"]) {
            if (!lab.is_number_integer())
                throw std::invalid_argument("graph: JSON labels must be integers");
            labels.push_back(lab.get<std::int64_t>());
        }
        Graph g(std::move(labels));
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw std::invalid_argument("graph: JSON edge must be an integer [a, b] pair");
            int u = g.position_of(e[0].get<std::int64_t>());
            int v = g.position_of(e[1].get<std::int64_t>());
            if (u < 0 || v < 0)
                throw std::invalid_argument("graph: JSON edge references unknown label");
            g.add_edge(u, v);
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph: invalid JSON graph: ") + e.what());
    }
}

}  // namespace coprime
