#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cmotif/graph.hpp"
#include "support/fixtures.hpp"

using namespace cmotif;

namespace {

// Color-isomorphism by trying every bijection between the vertex sets.
bool brute_isomorphic(const ColorfulTree& a, const ColorfulTree& b) {
    if (a.size() != b.size() || a.edges().size() != b.edges().size()) return false;
    std::vector<Vertex> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex v = 0; v < a.size() && ok; ++v) ok = a.color_of(v) == b.color_of(perm[v]);
        for (const Edge& e : a.edges()) {
            if (!ok) break;
            ok = b.graph().has_edge(perm[e.u], perm[e.v]);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("build_graph accepts a single vertex") {
    const ColoredGraph g = ColoredGraph::build({0}, {});
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.vertices_of_color(0).size() == 1);
}

TEST_CASE("build_graph rejects malformed edge lists") {
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_WITH_AS(ColoredGraph::build({0, 1}, dup), doctest::Contains("duplicate edge"), GraphError);
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_WITH_AS(ColoredGraph::build({0, 1}, loop), doctest::Contains("self-loop"), GraphError);
    const std::vector<Edge> range{{0, 5}};
    CHECK_THROWS_AS(ColoredGraph::build({0, 1}, range), GraphError);
    CHECK_THROWS_AS(ColoredGraph::build({0, 3}, {}, 2), GraphError);
}

TEST_CASE("exponential family with three colors has 8 edges") {
    const ColoredGraph g = testing::exponential_family(3);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 8);
    for (Color c = 0; c < 3; ++c) CHECK(g.vertices_of_color(c).size() == 2);
}

TEST_CASE("adjacency is symmetric, sorted, and the color index partitions the vertices") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const ColoredGraph g = testing::random_graph(rng, 30, 5, 0.2);
        std::size_t indexed = 0;
        for (Color c = 0; c < g.color_count(); ++c) {
            for (Vertex v : g.vertices_of_color(c)) CHECK(g.color_of(v) == c);
            indexed += g.vertices_of_color(c).size();
        }
        CHECK(indexed == g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (std::size_t i = 0; i < nb.size(); ++i) {
                CHECK(g.has_edge(nb[i], v));
                const Edge& e = g.edge(g.incident_edges(v)[i]);
                CHECK(((e.u == v && e.v == nb[i]) || (e.v == v && e.u == nb[i])));
            }
        }
    }
}

TEST_CASE("colorful tree validation") {
    const std::vector<Edge> cycle{{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(ColorfulTree::build({0, 1, 2}, cycle), GraphError);
    const std::vector<Edge> path{{0, 1}, {1, 2}};
    CHECK_THROWS_WITH_AS(ColorfulTree::build({0, 1, 0}, path), doctest::Contains("not colorful"), GraphError);
    const std::vector<Edge> split{{0, 1}};
    CHECK_THROWS_AS(ColorfulTree::build({0, 1, 2, 3}, split), GraphError);
    CHECK_THROWS_AS(ColorfulTree(ColoredGraph{}), GraphError);
}

TEST_CASE("signature examples") {
    const TreeSignature lone = signature(ColorfulTree::single(0));
    CHECK(lone.edges.empty());
    CHECK(lone.lone_color == Color{0});
    CHECK(signature(ColorfulTree::single(0)) != signature(ColorfulTree::single(1)));

    const std::vector<Edge> abc{{0, 1}, {1, 2}};
    const ColorfulTree forward = ColorfulTree::build({0, 1, 2}, abc);
    const ColorfulTree backward = ColorfulTree::build({2, 1, 0}, abc);
    CHECK(signature(forward) == signature(backward));

    const std::vector<Edge> star_edges{{0, 1}, {0, 2}, {0, 3}};
    const ColorfulTree star = ColorfulTree::build({3, 0, 1, 2}, star_edges);
    const std::vector<Edge> path_edges{{0, 1}, {1, 2}, {2, 3}};
    const ColorfulTree path = ColorfulTree::build({0, 1, 2, 3}, path_edges);
    CHECK_FALSE(brute_isomorphic(star, path));
    CHECK(signature(star) != signature(path));
}

TEST_CASE("signature equality matches brute-force color isomorphism") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 300; ++round) {
        const std::size_t size = 1 + rng() % 5;
        const ColorfulTree a = testing::random_tree(rng, size, 5);
        const ColorfulTree b = testing::random_tree(rng, size, 5);
        CHECK((signature(a) == signature(b)) == brute_isomorphic(a, b));
    }
}

TEST_CASE("signature is invariant under vertex renumbering") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        const ColorfulTree t = testing::random_tree(rng, 1 + rng() % 7, 9);
        std::vector<Vertex> perm(t.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Color> colors(t.size());
        for (Vertex v = 0; v < t.size(); ++v) colors[perm[v]] = t.color_of(v);
        std::vector<Edge> edges;
        for (const Edge& e : t.edges()) edges.push_back(Edge{perm[e.v], perm[e.u]});
        const ColorfulTree relabelled = ColorfulTree::build(std::move(colors), edges);
        CHECK(signature(relabelled) == signature(t));
        CHECK(signature(tree_from_signature(signature(t))) == signature(t));
    }
}

TEST_CASE("with_leaf grows a tree by one leaf") {
    const ColorfulTree t = ColorfulTree::single(4).with_leaf(0, 2).with_leaf(1, 7);
    CHECK(t.size() == 3);
    CHECK(t.color_set() == std::vector<Color>{2, 4, 7});
    CHECK(t.vertex_of_color(7) == 2);
    CHECK(t.vertex_of_color(5) == kNoVertex);
    CHECK_THROWS_AS(t.with_leaf(0, 4), GraphError);
}
