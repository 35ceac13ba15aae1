#include "cmotif/count.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "cmotif/tree_gen.hpp"

namespace cmotif {

RootedTreeOrder RootedTreeOrder::from(const ColorfulTree& tree, Vertex root) {
    const std::size_t n = tree.size();
    RootedTreeOrder order;
    order.root = root;
    order.parent.assign(n, kNoVertex);
    order.children.assign(n, {});
    order.position.assign(n, 0);
    order.bfs.reserve(n);
    order.bfs.push_back(root);
    std::vector<bool> seen(n, false);
    seen[root] = true;
    for (std::size_t head = 0; head < order.bfs.size(); ++head) {
        const Vertex u = order.bfs[head];
        order.position[u] = head;
        for (Vertex w : tree.neighbors(u)) {
            if (seen[w]) continue;
            seen[w] = true;
            order.parent[w] = u;
            order.children[u].push_back(w);
            order.bfs.push_back(w);
        }
    }
    return order;
}

Vertex default_root(const ColorfulTree& tree) {
    Vertex best = 0;
    for (Vertex v = 1; v < tree.size(); ++v) {
        if (tree.color_of(v) < tree.color_of(best)) best = v;
    }
    return best;
}

namespace {

struct Checked64 {
    using Num = std::uint64_t;
    static bool add(Num& a, const Num& b) { return !__builtin_add_overflow(a, b, &a); }
    static bool mul(Num& a, const Num& b) { return !__builtin_mul_overflow(a, b, &a); }
};

struct Exact {
    using Num = OccurrenceCount;
    static bool add(Num& a, const Num& b) {
        a += b;
        return true;
    }
    static bool mul(Num& a, const Num& b) {
        a *= b;
        return true;
    }
};

/// nullopt on overflow of Ops::Num.
template <class Ops>
std::optional<typename Ops::Num> count_dp(const ColoredGraph& g, const ColorfulTree& tree,
                                          const RootedTreeOrder& order) {
    using Num = typename Ops::Num;
    const std::size_t k = tree.size();

    // tree vertex by color, over the union of both color ranges
    const std::size_t colors = std::max(g.color_count(), tree.color_bound());
    std::vector<Vertex> node_of(colors, kNoVertex);
    for (Vertex t = 0; t < k; ++t) node_of[tree.color_of(t)] = t;

    // slot of each child within its parent's child list
    std::vector<std::size_t> child_slot(k, 0);
    for (Vertex u = 0; u < k; ++u) {
        for (std::size_t i = 0; i < order.children[u].size(); ++i) child_slot[order.children[u][i]] = i;
    }

    std::vector<Num> count(g.vertex_count(), Num(0));
    std::vector<Num> sums;
    for (std::size_t i = k; i-- > 0;) {
        const Vertex u = order.bfs[i];
        const auto& kids = order.children[u];
        for (Vertex z : g.vertices_of_color(tree.color_of(u))) {
            if (kids.empty()) {
                count[z] = Num(1);
                continue;
            }
            sums.assign(kids.size(), Num(0));
            for (Vertex y : g.neighbors(z)) {
                const Vertex t = node_of[g.color_of(y)];
                if (t == kNoVertex || order.parent[t] != u) continue;
                if (!Ops::add(sums[child_slot[t]], count[y])) return std::nullopt;
            }
            Num product(1);
            for (const Num& s : sums) {
                if (s == 0) {
                    product = Num(0);
                    break;
                }
                if (!Ops::mul(product, s)) return std::nullopt;
            }
            count[z] = std::move(product);
        }
    }
    Num total(0);
    for (Vertex z : g.vertices_of_color(tree.color_of(order.root))) {
        if (!Ops::add(total, count[z])) return std::nullopt;
    }
    return total;
}

}  // namespace

OccurrenceCount eta(const ColoredGraph& g, const ColorfulTree& tree, Vertex root) {
    const RootedTreeOrder order = RootedTreeOrder::from(tree, root);
    if (auto fast = count_dp<Checked64>(g, tree, order)) return OccurrenceCount(*fast);
    return *count_dp<Exact>(g, tree, order);
}

OccurrenceCount eta(const ColoredGraph& g, const ColorfulTree& tree) { return eta(g, tree, default_root(tree)); }

OccurrenceCount eta_colorset(const ColoredGraph& g, std::span<const Color> colors) {
    ColorfulTreeGenerator gen({colors.begin(), colors.end()});
    OccurrenceCount total = 0;
    while (auto tree = gen.next()) total += eta(g, *tree);
    return total;
}

}  // namespace cmotif
