#ifndef CMOTIF_TESTS_FIXTURES_HPP
#define CMOTIF_TESTS_FIXTURES_HPP

// Graph builders and a brute-force occurrence oracle shared by the test
// suites. The oracle only uses the raw vertex colors and edge list of the
// graph, never the library's color index or search code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cmotif/graph.hpp"

namespace cmotif::testing {

/// Path on colors 0..n-1 with two vertices per color, each color-i vertex
/// joined to both color-(i+1) vertices: 2^n occurrences of the color path.
inline ColoredGraph exponential_family(std::uint32_t n) {
    std::vector<Color> colors;
    for (Color c = 0; c < n; ++c) {
        colors.push_back(c);
        colors.push_back(c);
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) {
        for (Vertex a : {2 * i, 2 * i + 1}) {
            for (Vertex b : {2 * i + 2, 2 * i + 3}) edges.push_back(Edge{a, b});
        }
    }
    return ColoredGraph::build(std::move(colors), edges);
}

inline ColorfulTree color_path(std::uint32_t n) {
    std::vector<Color> colors;
    std::vector<Edge> edges;
    for (Color c = 0; c < n; ++c) colors.push_back(c);
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
    return ColorfulTree::build(std::move(colors), edges);
}

inline ColoredGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t k, double density) {
    std::uniform_int_distribution<Color> color(0, static_cast<Color>(k - 1));
    std::bernoulli_distribution edge(density);
    std::vector<Color> colors(n);
    for (auto& c : colors) c = color(rng);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (edge(rng)) edges.push_back(Edge{u, v});
        }
    }
    return ColoredGraph::build(std::move(colors), edges, k);
}

/// Random tree of `size` vertices on distinct colors drawn from 0..k-1.
inline ColorfulTree random_tree(std::mt19937_64& rng, std::size_t size, std::size_t k) {
    std::vector<Color> palette(k);
    for (Color c = 0; c < k; ++c) palette[c] = c;
    std::shuffle(palette.begin(), palette.end(), rng);
    std::vector<Color> colors(palette.begin(), palette.begin() + static_cast<std::ptrdiff_t>(size));
    std::vector<Edge> edges;
    for (Vertex v = 1; v < size; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        edges.push_back(Edge{parent(rng), v});
    }
    return ColorfulTree::build(std::move(colors), edges);
}

struct Instance {
    ColoredGraph g;
    ColorfulTree t;
};

/// |V_G| <= 12, |V_T| <= 5, 3..6 colors.
inline Instance random_instance(std::mt19937_64& rng) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(3, 6)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const double density = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(5, k))(rng);
    ColoredGraph g = random_graph(rng, n, k, density);
    ColorfulTree t = random_tree(rng, size, k);
    return {std::move(g), std::move(t)};
}

/// Every occurrence, found by trying all color-respecting vertex assignments.
inline std::vector<Occurrence> brute_force_occurrences(const ColoredGraph& g, const ColorfulTree& t) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

    const std::size_t k = t.size();
    std::vector<std::vector<Vertex>> choices(k);
    for (Vertex x = 0; x < k; ++x) {
        for (Vertex v = 0; v < n; ++v) {
            if (g.color_of(v) == t.color_of(x)) choices[x].push_back(v);
        }
        if (choices[x].empty()) return {};
    }
    std::set<Occurrence> found;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        bool ok = true;
        for (const Edge& e : t.edges()) {
            if (!adj[choices[e.u][idx[e.u]]][choices[e.v][idx[e.v]]]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Occurrence occ;
            for (Vertex x = 0; x < k; ++x) occ.vertices.push_back(choices[x][idx[x]]);
            std::sort(occ.vertices.begin(), occ.vertices.end());
            for (const Edge& e : t.edges()) {
                const Vertex a = choices[e.u][idx[e.u]];
                const Vertex b = choices[e.v][idx[e.v]];
                occ.edges.push_back(Edge{std::min(a, b), std::max(a, b)});
            }
            std::sort(occ.edges.begin(), occ.edges.end());
            found.insert(std::move(occ));
        }
        std::size_t i = 0;
        while (i < k && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == k) break;
    }
    return {found.begin(), found.end()};
}

/// `per_color` background vertices of each color joined with probability
/// `density`, plus `copies` vertex-disjoint copies of `motif` on fresh vertices.
inline ColoredGraph planted_graph(std::mt19937_64& rng, std::size_t k, std::size_t per_color, double density,
                                  const ColorfulTree& motif, std::size_t copies) {
    std::vector<Color> colors;
    for (Color c = 0; c < k; ++c) colors.insert(colors.end(), per_color, c);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < copies; ++i) {
        const auto base = static_cast<Vertex>(colors.size());
        for (Vertex x = 0; x < motif.size(); ++x) colors.push_back(motif.color_of(x));
        for (const Edge& e : motif.edges()) edges.push_back(Edge{base + e.u, base + e.v});
    }
    std::bernoulli_distribution edge(density);
    const auto n = static_cast<Vertex>(colors.size());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (edge(rng)) edges.push_back(Edge{u, v});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return ColoredGraph::build(std::move(colors), edges, k);
}

inline std::vector<Occurrence> sorted(std::vector<Occurrence> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace cmotif::testing

#endif
