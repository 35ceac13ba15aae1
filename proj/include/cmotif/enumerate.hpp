#ifndef CMOTIF_ENUMERATE_HPP
#define CMOTIF_ENUMERATE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cmotif/clean.hpp"
#include "cmotif/graph.hpp"
#include "cmotif/search.hpp"

namespace cmotif {

struct EnumerateOptions {
    /// Maximum number of occurrences to emit; 0 means unlimited.
    std::size_t limit = 0;
};

/*
 * Lazy stream over all occurrences of a colorful tree in its maximum clean
 * subgraph. Occurrences are grown one leaf at a time in the reverse of the
 * leaf-elimination order, starting from a vertex of the root color; in a
 * clean subgraph every partial assignment extends, so the cost per emitted
 * occurrence is bounded by the degrees it touches. Memory is O(|V_T|).
 *
 * Throws GraphError if `h` was not computed for a tree with the same
 * signature as `tree`.
 */
class OccurrenceStream {
public:
    OccurrenceStream(const CleanSubgraph& h, const ColorfulTree& tree, EnumerateOptions opts = {});

    std::optional<Occurrence> next();
    std::vector<Occurrence> next_batch(std::size_t max_count);

    std::size_t emitted() const { return emitted_; }
    /// Set once the limit was hit while further occurrences remained.
    bool truncated() const { return truncated_; }

private:
    bool advance();
    bool pick(std::size_t level);
    Occurrence current() const;

    const CleanSubgraph* h_;
    const ColorfulTree* tree_;
    EnumerateOptions opts_;
    LeafElimination order_;
    std::vector<Vertex> roots_;
    std::vector<Vertex> assigned_;     // graph vertex per tree vertex
    std::vector<std::size_t> cursor_;  // per level
    bool started_ = false;
    bool finished_ = false;
    bool truncated_ = false;
    std::size_t emitted_ = 0;
};

struct EnumerationResult {
    std::vector<Occurrence> occurrences;
    bool truncated = false;
};

EnumerationResult all_colorful(const CleanSubgraph& h, const ColorfulTree& tree, EnumerateOptions opts = {});

/// mcg followed by all_colorful.
EnumerationResult enumerate_occurrences(const ColoredGraph& g, const ColorfulTree& tree, EnumerateOptions opts = {});

}  // namespace cmotif

#endif
