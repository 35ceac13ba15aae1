#include "cmotif/graph.hpp"

#include <algorithm>
#include <numeric>

namespace cmotif {

ColoredGraph ColoredGraph::build(std::vector<Color> colors, std::span<const Edge> edges,
                                 std::optional<std::size_t> color_count) {
    const std::size_t n = colors.size();
    std::size_t k = 0;
    for (Color c : colors) k = std::max<std::size_t>(k, std::size_t{c} + 1);
    if (color_count) {
        if (k > *color_count) {
            throw GraphError("vertex color " + std::to_string(k - 1) + " outside color universe of size " +
                             std::to_string(*color_count));
        }
        k = *color_count;
    }

    ColoredGraph g;
    g.colors_ = std::move(colors);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (e.u == e.v) throw GraphError("self-loop on vertex " + std::to_string(e.u));
        g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }

    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.adjacency_.resize(2 * g.edges_.size());
    g.adjacent_edge_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (u, v): a vertex receives its smaller neighbors
    // first, then its larger ones, both ascending.
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const Edge& e = g.edges_[id];
        g.adjacency_[fill[e.u]] = e.v;
        g.adjacent_edge_[fill[e.u]++] = id;
        g.adjacency_[fill[e.v]] = e.u;
        g.adjacent_edge_[fill[e.v]++] = id;
    }

    g.color_offsets_.assign(k + 1, 0);
    for (Color c : g.colors_) ++g.color_offsets_[c + 1];
    std::partial_sum(g.color_offsets_.begin(), g.color_offsets_.end(), g.color_offsets_.begin());
    g.color_vertices_.resize(n);
    std::vector<std::size_t> cfill(g.color_offsets_.begin(), g.color_offsets_.end() - 1);
    for (Vertex v = 0; v < n; ++v) g.color_vertices_[cfill[g.colors_[v]]++] = v;
    return g;
}

bool ColoredGraph::has_edge(Vertex a, Vertex b) const {
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t TreeSignatureHash::operator()(const TreeSignature& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(s.lone_color ? *s.lone_color + 1ULL : 0ULL);
    for (const ColorPair& p : s.edges) mix((std::uint64_t{p.first} << 32) | p.second);
    return static_cast<std::size_t>(h);
}

ColorfulTree::ColorfulTree(ColoredGraph graph) : graph_(std::move(graph)) {
    const std::size_t n = graph_.vertex_count();
    if (n == 0) throw GraphError("tree must have at least one vertex");
    if (graph_.edge_count() != n - 1) {
        throw GraphError("not a tree: " + std::to_string(n) + " vertices but " +
                         std::to_string(graph_.edge_count()) + " edges");
    }
    for (Color c = 0; c < graph_.color_count(); ++c) {
        if (graph_.vertices_of_color(c).size() > 1) {
            throw GraphError("tree is not colorful: color " + std::to_string(c) + " repeats");
        }
    }
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : graph_.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) throw GraphError("not a tree: graph is disconnected");
}

ColorfulTree ColorfulTree::build(std::vector<Color> colors, std::span<const Edge> edges) {
    return ColorfulTree(ColoredGraph::build(std::move(colors), edges));
}

ColorfulTree ColorfulTree::single(Color c) { return build({c}, {}); }

Vertex ColorfulTree::vertex_of_color(Color c) const {
    auto vs = graph_.vertices_of_color(c);
    return vs.empty() ? kNoVertex : vs.front();
}

std::vector<Color> ColorfulTree::color_set() const {
    std::vector<Color> out(graph_.colors().begin(), graph_.colors().end());
    std::sort(out.begin(), out.end());
    return out;
}

ColorfulTree ColorfulTree::with_leaf(Vertex at, Color c) const {
    std::vector<Color> colors(graph_.colors().begin(), graph_.colors().end());
    std::vector<Edge> edges(graph_.edges().begin(), graph_.edges().end());
    const auto leaf = static_cast<Vertex>(colors.size());
    colors.push_back(c);
    edges.push_back(Edge{at, leaf});
    return build(std::move(colors), edges);
}

TreeSignature signature(const ColorfulTree& tree) {
    TreeSignature sig;
    sig.edges.reserve(tree.edges().size());
    for (const Edge& e : tree.edges()) {
        sig.edges.push_back(ColorPair::of(tree.color_of(e.u), tree.color_of(e.v)));
    }
    std::sort(sig.edges.begin(), sig.edges.end());
    if (sig.edges.empty()) sig.lone_color = tree.color_of(0);
    return sig;
}

ColorfulTree tree_from_signature(const TreeSignature& sig) {
    if (sig.edges.empty()) {
        if (!sig.lone_color) throw GraphError("empty signature without a color");
        return ColorfulTree::single(*sig.lone_color);
    }
    std::vector<Color> colors;
    for (const ColorPair& p : sig.edges) {
        colors.push_back(p.first);
        colors.push_back(p.second);
    }
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    auto index = [&colors](Color c) {
        return static_cast<Vertex>(std::lower_bound(colors.begin(), colors.end(), c) - colors.begin());
    };
    std::vector<Edge> edges;
    for (const ColorPair& p : sig.edges) edges.push_back(Edge{index(p.first), index(p.second)});
    return ColorfulTree::build(std::move(colors), edges);
}

bool is_valid_occurrence(const ColoredGraph& g, const ColorfulTree& tree, const Occurrence& occ) {
    if (occ.vertices.size() != tree.size()) return false;
    if (!std::is_sorted(occ.vertices.begin(), occ.vertices.end())) return false;
    if (std::adjacent_find(occ.vertices.begin(), occ.vertices.end()) != occ.vertices.end()) return false;
    std::vector<Vertex> by_tree_vertex(tree.size(), kNoVertex);
    for (Vertex v : occ.vertices) {
        if (v >= g.vertex_count()) return false;
        const Vertex t = tree.vertex_of_color(g.color_of(v));
        if (t == kNoVertex || by_tree_vertex[t] != kNoVertex) return false;
        by_tree_vertex[t] = v;
    }
    if (occ.edges.size() != tree.edges().size()) return false;
    std::vector<Edge> expected;
    for (const Edge& e : tree.edges()) {
        const Vertex a = by_tree_vertex[e.u];
        const Vertex b = by_tree_vertex[e.v];
        if (!g.has_edge(a, b)) return false;
        expected.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(expected.begin(), expected.end());
    return expected == occ.edges;
}

}  // namespace cmotif
