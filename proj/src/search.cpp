#include "cmotif/search.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace cmotif {

LeafElimination leaf_elimination(const ColorfulTree& tree, LeafOrder order) {
    const std::size_t n = tree.size();
    LeafElimination out;
    if (n == 1) {
        out.root = 0;
        return out;
    }
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    // keyed by color so the choice of leaf is deterministic
    auto key = [&](Vertex v) -> long long {
        const long long c = tree.color_of(v);
        return order == LeafOrder::SmallestColorFirst ? c : -c;
    };
    using Item = std::pair<long long, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = tree.neighbors(v).size();
        if (degree[v] == 1) leaves.emplace(key(v), v);
    }
    for (std::size_t round = 0; round + 1 < n; ++round) {
        const Vertex x = leaves.top().second;
        leaves.pop();
        removed[x] = true;
        Vertex y = kNoVertex;
        for (Vertex w : tree.neighbors(x)) {
            if (!removed[w]) y = w;
        }
        out.steps.push_back({x, y});
        if (--degree[y] == 1) leaves.emplace(key(y), y);
    }
    out.root = leaves.top().second;
    return out;
}

std::span<const Vertex> PredecessorMap::predecessors(std::size_t round, Vertex v) const {
    const Round& r = rounds[round];
    auto it = std::lower_bound(r.survivors.begin(), r.survivors.end(), v);
    if (it == r.survivors.end() || *it != v) return {};
    const auto i = static_cast<std::size_t>(it - r.survivors.begin());
    return {r.predecessors.data() + r.offsets[i], r.predecessors.data() + r.offsets[i + 1]};
}

namespace {

/// Shared body of decide/trace. `map` is filled only when non-null.
bool strip_leaves(const ColoredGraph& g, const ColorfulTree& tree, const LeafElimination& order,
                  PredecessorMap* map) {
    // live[t]: vertices of tree vertex t's color that are still in the graph
    std::vector<std::vector<Vertex>> live(tree.size());
    for (Vertex t = 0; t < tree.size(); ++t) {
        auto vs = g.vertices_of_color(tree.color_of(t));
        live[t].assign(vs.begin(), vs.end());
    }
    std::vector<char> alive(g.vertex_count(), 0);
    for (const auto& l : live) {
        for (Vertex v : l) alive[v] = 1;
    }
    std::vector<char> mark(g.vertex_count(), 0);
    std::vector<std::pair<Vertex, Vertex>> links;

    for (const auto& step : order.steps) {
        auto& a_set = live[step.leaf];
        auto& candidates = live[step.parent];
        const Color parent_color = tree.color_of(step.parent);
        links.clear();
        for (Vertex a : a_set) {
            for (Vertex w : g.neighbors(a)) {
                if (alive[w] && g.color_of(w) == parent_color) {
                    mark[w] = 1;
                    if (map) links.emplace_back(w, a);
                }
            }
        }
        std::size_t kept = 0;
        for (Vertex b : candidates) {
            if (mark[b]) {
                mark[b] = 0;
                candidates[kept++] = b;
            } else {
                alive[b] = 0;
            }
        }
        candidates.resize(kept);
        for (Vertex a : a_set) alive[a] = 0;
        a_set.clear();
        a_set.shrink_to_fit();

        if (map) {
            std::sort(links.begin(), links.end());
            PredecessorMap::Round round;
            round.survivors = candidates;
            round.offsets.reserve(candidates.size() + 1);
            round.predecessors.reserve(links.size());
            round.offsets.push_back(0);
            std::size_t j = 0;
            for (Vertex b : candidates) {
                while (j < links.size() && links[j].first == b) round.predecessors.push_back(links[j++].second);
                round.offsets.push_back(round.predecessors.size());
            }
            map->rounds.push_back(std::move(round));
        }
    }
    if (map) map->root_candidates = live[order.root];
    return !live[order.root].empty();
}

}  // namespace

bool tcg_decide(const ColoredGraph& g, const ColorfulTree& tree, SearchOptions opts) {
    return strip_leaves(g, tree, leaf_elimination(tree, opts.leaf_order), nullptr);
}

PredecessorMap tcg_trace(const ColoredGraph& g, const ColorfulTree& tree, const LeafElimination& order) {
    PredecessorMap map;
    strip_leaves(g, tree, order, &map);
    return map;
}

std::optional<Occurrence> tcg_extract(const ColoredGraph& g, const ColorfulTree& tree, SearchOptions opts) {
    const LeafElimination order = leaf_elimination(tree, opts.leaf_order);
    const PredecessorMap map = tcg_trace(g, tree, order);
    if (map.root_candidates.empty()) return std::nullopt;

    std::vector<Vertex> assigned(tree.size(), kNoVertex);
    assigned[order.root] = map.root_candidates.front();
    Occurrence occ;
    for (std::size_t i = order.steps.size(); i-- > 0;) {
        const auto& step = order.steps[i];
        auto preds = map.predecessors(i, assigned[step.parent]);
        // every survivor of round i kept at least one predecessor
        const Vertex chosen = preds.front();
        assigned[step.leaf] = chosen;
        const Vertex p = assigned[step.parent];
        occ.edges.push_back(Edge{std::min(p, chosen), std::max(p, chosen)});
    }
    occ.vertices = assigned;
    std::sort(occ.vertices.begin(), occ.vertices.end());
    std::sort(occ.edges.begin(), occ.edges.end());
    return occ;
}

}  // namespace cmotif
