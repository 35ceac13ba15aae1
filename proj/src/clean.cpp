#include "cmotif/clean.hpp"

#include <algorithm>

namespace cmotif {

CleanSubgraph::CleanSubgraph(const ColoredGraph& base, ColorfulTree tree, std::vector<char> vertex_alive,
                             std::vector<char> edge_alive)
    : base_(&base),
      tree_(std::move(tree)),
      vertex_alive_(std::move(vertex_alive)),
      edge_alive_(std::move(edge_alive)) {
    alive_vertices_ = static_cast<std::size_t>(std::count(vertex_alive_.begin(), vertex_alive_.end(), 1));
    alive_edges_ = static_cast<std::size_t>(std::count(edge_alive_.begin(), edge_alive_.end(), 1));
}

std::vector<Vertex> CleanSubgraph::alive_vertices() const {
    std::vector<Vertex> out;
    out.reserve(alive_vertices_);
    for (Vertex v = 0; v < vertex_alive_.size(); ++v) {
        if (vertex_alive_[v]) out.push_back(v);
    }
    return out;
}

std::vector<Edge> CleanSubgraph::alive_edges() const {
    std::vector<Edge> out;
    out.reserve(alive_edges_);
    for (EdgeId e = 0; e < edge_alive_.size(); ++e) {
        if (edge_alive_[e]) out.push_back(base_->edge(e));
    }
    return out;
}

ColoredGraph CleanSubgraph::to_graph(std::vector<Vertex>* original_ids) const {
    std::vector<Vertex> ids = alive_vertices();
    std::vector<Vertex> remap(base_->vertex_count(), kNoVertex);
    std::vector<Color> colors;
    colors.reserve(ids.size());
    for (Vertex i = 0; i < ids.size(); ++i) {
        remap[ids[i]] = i;
        colors.push_back(base_->color_of(ids[i]));
    }
    std::vector<Edge> edges;
    for (const Edge& e : alive_edges()) edges.push_back(Edge{remap[e.u], remap[e.v]});
    if (original_ids) *original_ids = std::move(ids);
    return ColoredGraph::build(std::move(colors), edges, base_->color_count());
}

CleanSubgraph mcg(const ColoredGraph& g, const ColorfulTree& tree) {
    const std::size_t n = g.vertex_count();
    const std::size_t k = tree.size();

    // tree vertex of each graph vertex's color, kNoVertex if the color is not in the tree
    std::vector<Vertex> node(n, kNoVertex);
    std::vector<char> vertex_alive(n, 0);
    for (Vertex t = 0; t < k; ++t) {
        for (Vertex v : g.vertices_of_color(tree.color_of(t))) {
            node[v] = t;
            vertex_alive[v] = 1;
        }
    }

    // slot[t * k + s]: index of s among t's tree neighbors, or -1 if not adjacent
    std::vector<int> slot(k * k, -1);
    std::vector<std::size_t> tree_degree(k);
    for (Vertex t = 0; t < k; ++t) {
        auto nb = tree.neighbors(t);
        tree_degree[t] = nb.size();
        for (std::size_t i = 0; i < nb.size(); ++i) slot[t * k + nb[i]] = static_cast<int>(i);
    }

    std::vector<char> edge_alive(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const Vertex a = node[ed.u];
        const Vertex b = node[ed.v];
        if (a != kNoVertex && b != kNoVertex && slot[a * k + b] >= 0) edge_alive[e] = 1;
    }

    // support[offset[v] + i]: alive neighbors of v playing the i-th tree neighbor of node[v]
    std::vector<std::size_t> offset(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + (node[v] == kNoVertex ? 0 : tree_degree[node[v]]);
    std::vector<std::size_t> support(offset[n], 0);
    std::vector<std::size_t> missing(n, 0);
    std::vector<Vertex> worklist;
    for (Vertex v = 0; v < n; ++v) {
        if (!vertex_alive[v]) continue;
        auto nb = g.neighbors(v);
        auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (edge_alive[inc[i]]) ++support[offset[v] + slot[node[v] * k + node[nb[i]]]];
        }
        for (std::size_t i = offset[v]; i < offset[v + 1]; ++i) missing[v] += support[i] == 0;
        if (missing[v] > 0) worklist.push_back(v);
    }

    while (!worklist.empty()) {
        const Vertex v = worklist.back();
        worklist.pop_back();
        if (!vertex_alive[v]) continue;
        vertex_alive[v] = 0;
        auto nb = g.neighbors(v);
        auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (!edge_alive[inc[i]]) continue;
            edge_alive[inc[i]] = 0;
            const Vertex u = nb[i];
            auto& s = support[offset[u] + slot[node[u] * k + node[v]]];
            if (--s == 0 && missing[u]++ == 0) worklist.push_back(u);
        }
    }
    return CleanSubgraph(g, tree, std::move(vertex_alive), std::move(edge_alive));
}

}  // namespace cmotif
