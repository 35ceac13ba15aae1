#ifndef CMOTIF_COUNT_HPP
#define CMOTIF_COUNT_HPP

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmotif/graph.hpp"

namespace cmotif {

/// Exact occurrence count; occurrence counts can be exponential in |V_T|.
using OccurrenceCount = boost::multiprecision::cpp_int;

/// Breadth-first layout of a tree rooted at `root`.
struct RootedTreeOrder {
    Vertex root = 0;
    std::vector<Vertex> bfs;                    // bfs[0] == root
    std::vector<Vertex> parent;                 // kNoVertex for the root
    std::vector<std::vector<Vertex>> children;  // direct descendants
    std::vector<std::size_t> position;          // index of each vertex in bfs

    static RootedTreeOrder from(const ColorfulTree& tree, Vertex root);
};

/// Tree vertex with the smallest color; the default counting root.
Vertex default_root(const ColorfulTree& tree);

/*
 * Number of occurrences of `tree` in `g` by the bottom-up product-of-sums
 * recurrence: N[z] counts occurrences of the subtree below u that map u to
 * z, and the answer sums N over the root's color class. Linear in the size
 * of g for a fixed tree. Runs in checked 64-bit arithmetic and repeats in
 * arbitrary precision only if that overflows.
 */
OccurrenceCount eta(const ColoredGraph& g, const ColorfulTree& tree);
OccurrenceCount eta(const ColoredGraph& g, const ColorfulTree& tree, Vertex root);

/// Sum of eta over every labelled tree on `colors`. A connected vertex set
/// with several spanning colorful trees contributes once per such tree.
OccurrenceCount eta_colorset(const ColoredGraph& g, std::span<const Color> colors);

}  // namespace cmotif

#endif
