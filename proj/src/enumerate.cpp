#include "cmotif/enumerate.hpp"

#include <algorithm>

namespace cmotif {

OccurrenceStream::OccurrenceStream(const CleanSubgraph& h, const ColorfulTree& tree, EnumerateOptions opts)
    : h_(&h), tree_(&tree), opts_(opts), order_(leaf_elimination(tree)) {
    if (signature(h.tree()) != signature(tree)) {
        throw GraphError("clean subgraph was computed for a different tree");
    }
    for (Vertex v : h.base().vertices_of_color(tree.color_of(order_.root))) {
        if (h.vertex_alive(v)) roots_.push_back(v);
    }
    assigned_.assign(tree.size(), kNoVertex);
    cursor_.assign(tree.size(), 0);
    finished_ = roots_.empty();
}

// Level 0 places the root; level j > 0 places the leaf removed at step k-1-j.
bool OccurrenceStream::pick(std::size_t level) {
    if (level == 0) {
        if (cursor_[0] >= roots_.size()) return false;
        assigned_[order_.root] = roots_[cursor_[0]];
        return true;
    }
    const auto& step = order_.steps[order_.steps.size() - level];
    const ColoredGraph& g = h_->base();
    const Vertex z = assigned_[step.parent];
    const Color want = tree_->color_of(step.leaf);
    auto nb = g.neighbors(z);
    auto inc = g.incident_edges(z);
    for (std::size_t i = cursor_[level]; i < nb.size(); ++i) {
        if (h_->edge_alive(inc[i]) && g.color_of(nb[i]) == want) {
            cursor_[level] = i;
            assigned_[step.leaf] = nb[i];
            return true;
        }
    }
    return false;
}

bool OccurrenceStream::advance() {
    const std::size_t depth = tree_->size();
    std::size_t level = 0;
    if (!started_) {
        started_ = true;
        cursor_[0] = 0;
    } else {
        level = depth - 1;
        ++cursor_[level];
    }
    while (true) {
        if (pick(level)) {
            if (level + 1 == depth) return true;
            ++level;
            cursor_[level] = 0;
        } else {
            if (level == 0) return false;
            --level;
            ++cursor_[level];
        }
    }
}

Occurrence OccurrenceStream::current() const {
    Occurrence occ;
    occ.vertices = assigned_;
    std::sort(occ.vertices.begin(), occ.vertices.end());
    for (const auto& step : order_.steps) {
        const Vertex a = assigned_[step.leaf];
        const Vertex b = assigned_[step.parent];
        occ.edges.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(occ.edges.begin(), occ.edges.end());
    return occ;
}

std::optional<Occurrence> OccurrenceStream::next() {
    if (finished_) return std::nullopt;
    if (!advance()) {
        finished_ = true;
        return std::nullopt;
    }
    if (opts_.limit != 0 && emitted_ == opts_.limit) {
        truncated_ = true;
        finished_ = true;
        return std::nullopt;
    }
    ++emitted_;
    return current();
}

std::vector<Occurrence> OccurrenceStream::next_batch(std::size_t max_count) {
    std::vector<Occurrence> out;
    while (out.size() < max_count) {
        auto occ = next();
        if (!occ) break;
        out.push_back(std::move(*occ));
    }
    return out;
}

EnumerationResult all_colorful(const CleanSubgraph& h, const ColorfulTree& tree, EnumerateOptions opts) {
    OccurrenceStream stream(h, tree, opts);
    EnumerationResult out;
    while (auto occ = stream.next()) out.occurrences.push_back(std::move(*occ));
    out.truncated = stream.truncated();
    return out;
}

EnumerationResult enumerate_occurrences(const ColoredGraph& g, const ColorfulTree& tree, EnumerateOptions opts) {
    const CleanSubgraph h = mcg(g, tree);
    return all_colorful(h, tree, opts);
}

}  // namespace cmotif
