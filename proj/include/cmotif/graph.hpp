#ifndef CMOTIF_GRAPH_HPP
#define CMOTIF_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmotif {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Undirected edge, stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * Simple undirected graph with one color per vertex.
 *
 * Immutable once built. Adjacency is stored in CSR form with neighbors in
 * ascending order; every adjacency slot also carries the id of its edge so
 * algorithms can keep per-edge masks. Colors are dense ids 0..color_count-1
 * and vertices_of_color(c) lists the vertices of color c in ascending order.
 */
class ColoredGraph {
public:
    ColoredGraph() = default;

    /// Validates and builds. Throws GraphError on self-loops, duplicate
    /// edges (in either orientation), out-of-range vertex ids, or colors
    /// outside [0, color_count) when color_count is given.
    static ColoredGraph build(std::vector<Color> colors,
                              std::span<const Edge> edges,
                              std::optional<std::size_t> color_count = std::nullopt);

    std::size_t vertex_count() const { return colors_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t color_count() const { return color_offsets_.empty() ? 0 : color_offsets_.size() - 1; }

    Color color_of(Vertex v) const { return colors_[v]; }
    std::span<const Color> colors() const { return colors_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::span<const EdgeId> incident_edges(Vertex v) const {
        return {adjacent_edge_.data() + offsets_[v], adjacent_edge_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Empty for colors outside the universe, so callers can probe any id.
    std::span<const Vertex> vertices_of_color(Color c) const {
        if (c >= color_count()) return {};
        return {color_vertices_.data() + color_offsets_[c],
                color_vertices_.data() + color_offsets_[c + 1]};
    }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    bool has_edge(Vertex a, Vertex b) const;

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    std::vector<Color> colors_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<EdgeId> adjacent_edge_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> color_offsets_;
    std::vector<Vertex> color_vertices_;
};

/// Unordered pair of colors stored with first <= second.
struct ColorPair {
    Color first = 0;
    Color second = 0;

    static ColorPair of(Color a, Color b) { return a < b ? ColorPair{a, b} : ColorPair{b, a}; }

    friend bool operator==(const ColorPair&, const ColorPair&) = default;
    friend auto operator<=>(const ColorPair&, const ColorPair&) = default;
};

/*
 * Canonical form of a colorful tree: its color-labelled edge set, sorted.
 * A colorful tree is determined up to color-isomorphism by that set. The
 * edge-less tree has no pairs, so its single color is kept separately.
 */
struct TreeSignature {
    std::vector<ColorPair> edges;
    std::optional<Color> lone_color;

    friend bool operator==(const TreeSignature&, const TreeSignature&) = default;
    friend auto operator<=>(const TreeSignature&, const TreeSignature&) = default;
};

struct TreeSignatureHash {
    std::size_t operator()(const TreeSignature& s) const noexcept;
};

/// A connected, acyclic ColoredGraph whose vertex colors are pairwise distinct.
class ColorfulTree {
public:
    /// Throws GraphError unless the input is a non-empty colorful tree.
    explicit ColorfulTree(ColoredGraph graph);

    static ColorfulTree build(std::vector<Color> colors, std::span<const Edge> edges);
    static ColorfulTree single(Color c);

    const ColoredGraph& graph() const { return graph_; }
    std::size_t size() const { return graph_.vertex_count(); }
    Color color_of(Vertex v) const { return graph_.color_of(v); }
    std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
    std::span<const Edge> edges() const { return graph_.edges(); }

    /// Vertex carrying color c, or kNoVertex.
    Vertex vertex_of_color(Color c) const;
    /// Largest color id used plus one.
    std::size_t color_bound() const { return graph_.color_count(); }
    /// Colors of the tree in ascending order.
    std::vector<Color> color_set() const;

    /// Returns the tree extended by a new leaf of color c hung off vertex at.
    ColorfulTree with_leaf(Vertex at, Color c) const;

private:
    ColoredGraph graph_;
};

TreeSignature signature(const ColorfulTree& tree);

/// Rebuilds the tree described by a signature (vertices numbered by color order).
ColorfulTree tree_from_signature(const TreeSignature& sig);

/// Vertex set plus the graph edges that realise the tree edges.
struct Occurrence {
    std::vector<Vertex> vertices;  // ascending
    std::vector<Edge> edges;       // ascending, canonical orientation

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Checks the occurrence invariants of `occ` for `tree` in `g`.
bool is_valid_occurrence(const ColoredGraph& g, const ColorfulTree& tree, const Occurrence& occ);

}  // namespace cmotif

#endif
