#ifndef CMOTIF_CLEAN_HPP
#define CMOTIF_CLEAN_HPP

#include <cstddef>
#include <vector>

#include "cmotif/graph.hpp"

namespace cmotif {

/*
 * Maximum clean subgraph of a base graph regarding a colorful tree, kept as
 * alive masks over the base. Every alive vertex and edge lies in some
 * occurrence of the tree, and every occurrence uses only alive elements.
 * The base graph must outlive this object.
 */
class CleanSubgraph {
public:
    CleanSubgraph(const ColoredGraph& base, ColorfulTree tree, std::vector<char> vertex_alive,
                  std::vector<char> edge_alive);

    const ColoredGraph& base() const { return *base_; }
    const ColorfulTree& tree() const { return tree_; }

    bool vertex_alive(Vertex v) const { return vertex_alive_[v] != 0; }
    bool edge_alive(EdgeId e) const { return edge_alive_[e] != 0; }
    std::size_t alive_vertex_count() const { return alive_vertices_; }
    std::size_t alive_edge_count() const { return alive_edges_; }
    bool empty() const { return alive_vertices_ == 0; }

    std::vector<Vertex> alive_vertices() const;
    std::vector<Edge> alive_edges() const;

    /// Alive part as a standalone graph over the same color universe.
    /// Vertex i of the result is original_ids[i] of the base.
    ColoredGraph to_graph(std::vector<Vertex>* original_ids = nullptr) const;

private:
    const ColoredGraph* base_;
    ColorfulTree tree_;
    std::vector<char> vertex_alive_;
    std::vector<char> edge_alive_;
    std::size_t alive_vertices_ = 0;
    std::size_t alive_edges_ = 0;
};

CleanSubgraph mcg(const ColoredGraph& g, const ColorfulTree& tree);

}  // namespace cmotif

#endif
