#include "cmotif/inference.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "cmotif/tree_gen.hpp"

namespace cmotif {

void InferenceParams::validate() const {
    std::vector<Color> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("colors of interest contain duplicates");
    }
    if (initial_size < 1) throw std::invalid_argument("initial size must be at least 1");
    if (initial_size > goal_size) throw std::invalid_argument("initial size exceeds goal size");
    if (goal_size > colors.size()) {
        throw std::invalid_argument("goal size " + std::to_string(goal_size) + " exceeds the " +
                                    std::to_string(colors.size()) + " colors of interest");
    }
    if (!(min_score >= 0.0 && min_score <= 1.0)) throw std::invalid_argument("score must lie in [0, 1]");
    if (worker_count < 1) throw std::invalid_argument("worker count must be at least 1");
    if (memory_cap && *memory_cap == 0) throw std::invalid_argument("memory cap must be positive");
}

bool MotifCandidateSet::insert(MotifReport report) {
    auto [it, fresh] = index_.try_emplace(report.signature, entries_.size());
    if (!fresh) return false;
    entries_.push_back(std::move(report));
    return true;
}

const MotifReport* MotifCandidateSet::find(const TreeSignature& sig) const {
    auto it = index_.find(sig);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<MotifReport> MotifCandidateSet::sorted() const {
    std::vector<MotifReport> out = entries_;
    std::sort(out.begin(), out.end(),
              [](const MotifReport& a, const MotifReport& b) { return a.signature < b.signature; });
    return out;
}

MotifCandidateSet remove_duplicates(std::span<const MotifReport> reports) {
    MotifCandidateSet out;
    for (const MotifReport& r : reports) out.insert(r);
    return out;
}

bool is_consistent(const ColorfulTree& tree, const NullModel& model) {
    for (const Edge& e : tree.edges()) {
        if (model.pair_count(tree.color_of(e.u), tree.color_of(e.v)) == 0) return false;
    }
    return true;
}

bool is_consistent(const ColorfulTree& tree, const ColoredGraph& g) { return is_consistent(tree, NullModel::fit(g)); }

std::optional<MotifReport> evaluate_motif(const ColoredGraph& g, const NullModel& model, const ColorfulTree& tree,
                                          const InferenceParams& params) {
    if (!is_consistent(tree, model)) return std::nullopt;
    OccurrenceCount count = eta(g, tree);
    if (count < params.threshold) return std::nullopt;
    MotifStats st = motif_stats(model, tree, count, params.variance_cap);
    if (st.y_score < params.min_score) return std::nullopt;
    return MotifReport{signature(tree), std::move(count), std::move(st.candidate_count), st.mu, st.expectation,
                       st.variance, st.y_score, st.chebyshev_bound};
}

namespace {

/// Calls fn(subset) for each size-s subset of `colors` in lexicographic order.
template <class Fn>
void for_each_subset(const std::vector<Color>& colors, std::size_t s, Fn&& fn) {
    const std::size_t n = colors.size();
    if (s > n) return;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    std::vector<Color> subset(s);
    while (true) {
        for (std::size_t i = 0; i < s; ++i) subset[i] = colors[idx[i]];
        fn(subset);
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Signature of `sig` without its leaf of color `leaf`.
TreeSignature without_leaf(const TreeSignature& sig, Color leaf) {
    TreeSignature out;
    for (const ColorPair& p : sig.edges) {
        if (p.first == leaf || p.second == leaf) {
            if (sig.edges.size() == 1) out.lone_color = p.first == leaf ? p.second : p.first;
            continue;
        }
        out.edges.push_back(p);
    }
    return out;
}

/*
 * One-leaf extensions of a survivor. A tree can be reached from several
 * survivors; it is only produced from the one obtained by deleting its
 * smallest-colored leaf whose deletion yields a survivor, so every
 * candidate of a round is produced exactly once without a global list.
 */
template <class Fn>
void for_each_extension(const TreeSignature& parent,
                        const std::unordered_set<TreeSignature, TreeSignatureHash>& survivors,
                        const std::vector<Color>& colors, Fn&& fn) {
    std::vector<Color> used;
    for (const ColorPair& p : parent.edges) {
        used.push_back(p.first);
        used.push_back(p.second);
    }
    if (parent.lone_color) used.push_back(*parent.lone_color);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    for (Color u : used) {
        for (Color a : colors) {
            if (std::binary_search(used.begin(), used.end(), a)) continue;
            TreeSignature child;
            child.edges = parent.edges;
            const ColorPair p = ColorPair::of(u, a);
            child.edges.insert(std::upper_bound(child.edges.begin(), child.edges.end(), p), p);

            bool canonical = true;
            for (Color b : used) {
                if (b >= a) break;
                std::size_t d = 0;
                for (const ColorPair& q : child.edges) d += (q.first == b) + (q.second == b);
                if (d == 1 && survivors.contains(without_leaf(child, b))) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) fn(child);
        }
    }
}

/// Keeps the best `cap` reports (y desc, eta desc, signature asc); returns true if any were dropped.
bool apply_cap(std::vector<MotifReport>& reports, const std::optional<std::size_t>& cap) {
    if (!cap || reports.size() <= *cap) return false;
    std::sort(reports.begin(), reports.end(), [](const MotifReport& a, const MotifReport& b) {
        if (a.y_score != b.y_score) return a.y_score > b.y_score;
        if (a.eta != b.eta) return a.eta > b.eta;
        return a.signature < b.signature;
    });
    reports.resize(*cap);
    return true;
}

/// Gather barrier: merge worker outputs, order by signature, drop duplicates.
std::vector<MotifReport> gather(std::vector<std::vector<MotifReport>>& parts) {
    std::vector<MotifReport> all;
    for (auto& p : parts) {
        for (auto& r : p) all.push_back(std::move(r));
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const MotifReport& a, const MotifReport& b) { return a.signature < b.signature; });
    return remove_duplicates(all).entries();
}

/// Runs task(worker, part) for each worker; one thread each when workers > 1.
template <class Task>
std::vector<std::vector<MotifReport>> scatter(std::size_t workers, Task&& task) {
    std::vector<std::vector<MotifReport>> parts(workers);
    if (workers == 1) {
        task(0, parts[0]);
        return parts;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back([&, w] { task(w, parts[w]); });
    pool.clear();
    return parts;
}

InferenceResult run_inference(const ColoredGraph& g, const InferenceParams& params, std::size_t workers) {
    params.validate();
    const NullModel model = NullModel::fit(g);
    std::vector<Color> colors = params.colors;
    std::sort(colors.begin(), colors.end());

    InferenceResult result;
    std::vector<std::vector<Color>> subsets;
    for_each_subset(colors, params.initial_size, [&](const std::vector<Color>& s) { subsets.push_back(s); });

    std::vector<std::size_t> generated(workers, 0);
    std::vector<std::size_t> evaluated(workers, 0);
    auto parts = scatter(workers, [&](std::size_t w, std::vector<MotifReport>& out) {
        for (std::size_t i = w; i < subsets.size(); i += workers) {
            ColorfulTreeGenerator gen(subsets[i]);
            while (auto tree = gen.next()) {
                ++generated[w];
                if (!is_consistent(*tree, model)) continue;
                ++evaluated[w];
                if (auto r = evaluate_motif(g, model, *tree, params)) out.push_back(std::move(*r));
            }
        }
    });
    std::vector<MotifReport> current = gather(parts);
    bool truncated = apply_cap(current, params.memory_cap);
    result.trace.survivors.push_back(current.size());

    for (std::size_t size = params.initial_size; size < params.goal_size; ++size) {
        std::sort(current.begin(), current.end(),
                  [](const MotifReport& a, const MotifReport& b) { return a.signature < b.signature; });
        std::unordered_set<TreeSignature, TreeSignatureHash> survivors;
        for (const MotifReport& r : current) survivors.insert(r.signature);
        parts = scatter(workers, [&](std::size_t w, std::vector<MotifReport>& out) {
            for (std::size_t i = w; i < current.size(); i += workers) {
                for_each_extension(current[i].signature, survivors, colors, [&](const TreeSignature& sig) {
                    const ColorfulTree tree = tree_from_signature(sig);
                    if (!is_consistent(tree, model)) return;
                    ++evaluated[w];
                    if (auto r = evaluate_motif(g, model, tree, params)) out.push_back(std::move(*r));
                });
            }
        });
        current = gather(parts);
        truncated = apply_cap(current, params.memory_cap) || truncated;
        result.trace.survivors.push_back(current.size());
    }

    std::sort(current.begin(), current.end(),
              [](const MotifReport& a, const MotifReport& b) { return a.signature < b.signature; });
    for (auto& r : current) result.motifs.insert(std::move(r));
    result.motifs.truncated = truncated;
    for (std::size_t w = 0; w < workers; ++w) {
        result.trace.phase_one_trees += generated[w];
        result.trace.evaluated += evaluated[w];
    }
    return result;
}

}  // namespace

InferenceResult motif_inference(const ColoredGraph& g, const InferenceParams& params) {
    return run_inference(g, params, 1);
}

InferenceResult motif_inference_parallel(const ColoredGraph& g, const InferenceParams& params) {
    return run_inference(g, params, params.worker_count);
}

}  // namespace cmotif
