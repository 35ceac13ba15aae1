#ifndef CMOTIF_TREE_GEN_HPP
#define CMOTIF_TREE_GEN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cmotif/graph.hpp"

namespace cmotif {

/*
 * Streams every labelled tree on a color set exactly once by decoding
 * Pruefer sequences in lexicographic order. Tree vertex i carries the i-th
 * smallest color. The stream is empty for an empty color set.
 */
class ColorfulTreeGenerator {
public:
    explicit ColorfulTreeGenerator(std::vector<Color> colors);

    std::optional<ColorfulTree> next();

    /// s^(s-2) for s >= 2, 1 for s == 1, 0 for s == 0.
    std::uint64_t total() const;

private:
    std::vector<Color> colors_;
    std::vector<std::uint32_t> code_;
    bool done_ = false;
};

/// Labelled tree for one Pruefer code over vertex labels 0..code.size()+1.
std::vector<Edge> decode_pruefer(std::span<const std::uint32_t> code);

std::vector<ColorfulTree> generate_colorful_trees(std::span<const Color> colors);

}  // namespace cmotif

#endif
