#ifndef CMOTIF_SEARCH_HPP
#define CMOTIF_SEARCH_HPP

#include <optional>
#include <span>
#include <vector>

#include "cmotif/graph.hpp"

namespace cmotif {

enum class LeafOrder { SmallestColorFirst, LargestColorFirst };

/*
 * Order in which leaves are stripped from a tree: step i removes leaf
 * steps[i].leaf, whose only remaining neighbor is steps[i].parent. The
 * vertex left at the end is `root`.
 */
struct LeafElimination {
    struct Step {
        Vertex leaf;
        Vertex parent;
    };
    std::vector<Step> steps;
    Vertex root = 0;
};

LeafElimination leaf_elimination(const ColorfulTree& tree, LeafOrder order = LeafOrder::SmallestColorFirst);

/// For every leaf-removal round, the vertices of the parent's color that
/// survived it, each with its neighbors of the removed leaf's color.
class PredecessorMap {
public:
    struct Round {
        std::vector<Vertex> survivors;       // ascending
        std::vector<std::size_t> offsets;    // survivors.size() + 1 entries
        std::vector<Vertex> predecessors;    // grouped by survivor, ascending within a group
    };

    std::span<const Vertex> predecessors(std::size_t round, Vertex v) const;

    std::vector<Round> rounds;
    std::vector<Vertex> root_candidates;  // surviving vertices with the root's color
};

struct SearchOptions {
    LeafOrder leaf_order = LeafOrder::SmallestColorFirst;
};

/// True iff `tree` is isomorphic to a subgraph of `g`. O(|V_G| + |E_G|) for fixed tree.
bool tcg_decide(const ColoredGraph& g, const ColorfulTree& tree, SearchOptions opts = {});

/// One occurrence of `tree` in `g`, or nothing when none exists.
std::optional<Occurrence> tcg_extract(const ColoredGraph& g, const ColorfulTree& tree, SearchOptions opts = {});

/// Runs the leaf-stripping search and returns the predecessor map it built.
/// The search succeeded iff root_candidates is non-empty.
PredecessorMap tcg_trace(const ColoredGraph& g, const ColorfulTree& tree, const LeafElimination& order);

}  // namespace cmotif

#endif
