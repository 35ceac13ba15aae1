#include "cmotif/tree_gen.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace cmotif {

ColorfulTreeGenerator::ColorfulTreeGenerator(std::vector<Color> colors) : colors_(std::move(colors)) {
    std::sort(colors_.begin(), colors_.end());
    if (std::adjacent_find(colors_.begin(), colors_.end()) != colors_.end()) {
        throw GraphError("color set contains duplicates");
    }
    done_ = colors_.empty();
    if (colors_.size() > 2) code_.assign(colors_.size() - 2, 0);
}

std::uint64_t ColorfulTreeGenerator::total() const {
    const std::uint64_t s = colors_.size();
    if (s <= 2) return s == 0 ? 0 : 1;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i + 2 < s; ++i) r *= s;
    return r;
}

std::optional<ColorfulTree> ColorfulTreeGenerator::next() {
    if (done_) return std::nullopt;
    std::vector<Edge> edges;
    if (colors_.size() == 2) {
        edges = {Edge{0, 1}};
    } else if (colors_.size() > 2) {
        edges = decode_pruefer(code_);
    }
    ColorfulTree tree = ColorfulTree::build(colors_, edges);

    // odometer increment, last position fastest
    const auto s = static_cast<std::uint32_t>(colors_.size());
    std::size_t i = code_.size();
    while (i > 0 && code_[i - 1] + 1 == s) code_[--i] = 0;
    if (i == 0) {
        done_ = true;
    } else {
        ++code_[i - 1];
    }
    return tree;
}

std::vector<Edge> decode_pruefer(std::span<const std::uint32_t> code) {
    const std::size_t n = code.size() + 2;
    std::vector<std::uint32_t> degree(n, 1);
    for (auto x : code) ++degree[x];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (auto x : code) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.push_back(Edge{std::min<Vertex>(leaf, x), std::max<Vertex>(leaf, x)});
        if (--degree[x] == 1) leaves.push(x);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    const Vertex b = leaves.top();
    edges.push_back(Edge{a, b});
    return edges;
}

std::vector<ColorfulTree> generate_colorful_trees(std::span<const Color> colors) {
    ColorfulTreeGenerator gen({colors.begin(), colors.end()});
    std::vector<ColorfulTree> out;
    while (auto t = gen.next()) out.push_back(std::move(*t));
    return out;
}

}  // namespace cmotif
