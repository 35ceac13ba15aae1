#include <doctest.h>

#include <random>
#include <set>

#include "cmotif/clean.hpp"
#include "cmotif/search.hpp"
#include "support/fixtures.hpp"

using namespace cmotif;

TEST_CASE("a graph equal to the tree is entirely clean") {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {1, 3}};
    const ColoredGraph g = ColoredGraph::build({0, 1, 2, 3}, e);
    const CleanSubgraph h = mcg(g, ColorfulTree(g));
    CHECK(h.alive_vertex_count() == 4);
    CHECK(h.alive_edge_count() == 3);
}

TEST_CASE("a vertex of a foreign color is dropped") {
    const std::vector<Edge> e{{0, 1}};
    const ColoredGraph g = ColoredGraph::build({0, 1, 2}, e);
    const CleanSubgraph h = mcg(g, ColorfulTree::build({0, 1}, e));
    CHECK(h.alive_vertices() == std::vector<Vertex>{0, 1});
    CHECK_FALSE(h.vertex_alive(2));
}

TEST_CASE("alive elements are exactly the union of all occurrences") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 1000; ++round) {
        const auto inst = testing::random_instance(rng);
        const auto occs = testing::brute_force_occurrences(inst.g, inst.t);
        std::set<Vertex> vs;
        std::set<Edge> es;
        for (const auto& o : occs) {
            vs.insert(o.vertices.begin(), o.vertices.end());
            es.insert(o.edges.begin(), o.edges.end());
        }
        const CleanSubgraph h = mcg(inst.g, inst.t);
        const auto alive_v = h.alive_vertices();
        const auto alive_e = h.alive_edges();
        CHECK(std::vector<Vertex>(vs.begin(), vs.end()) == alive_v);
        CHECK(std::vector<Edge>(es.begin(), es.end()) == alive_e);
        CHECK(h.empty() == !tcg_decide(inst.g, inst.t));

        // occurrences survive the cleaning, and cleaning again changes nothing
        const ColoredGraph sub = h.to_graph();
        CHECK(testing::brute_force_occurrences(sub, inst.t).size() == occs.size());
        const CleanSubgraph again = mcg(sub, inst.t);
        CHECK(again.alive_vertex_count() == sub.vertex_count());
        CHECK(again.alive_edge_count() == sub.edge_count());
    }
}
