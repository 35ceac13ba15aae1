#ifndef CMOTIF_INFERENCE_HPP
#define CMOTIF_INFERENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cmotif/count.hpp"
#include "cmotif/graph.hpp"
#include "cmotif/stats.hpp"

namespace cmotif {

struct InferenceParams {
    std::vector<Color> colors;  // colors of interest
    std::size_t initial_size = 1;
    std::size_t goal_size = 1;
    std::uint64_t threshold = 0;  // minimum occurrence count
    double min_score = 0.0;       // minimum y-score
    std::optional<std::size_t> memory_cap;
    std::size_t worker_count = 1;
    std::size_t variance_cap = kDefaultVarianceCap;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

struct MotifReport {
    TreeSignature signature;
    OccurrenceCount eta;
    OccurrenceCount candidates;
    double mu = 0.0;
    double expectation = 0.0;
    double variance = 0.0;
    double y_score = 0.0;
    std::optional<double> chebyshev_bound;
};

/// Reports keyed by signature; inserting an already present signature keeps
/// the first entry.
class MotifCandidateSet {
public:
    bool insert(MotifReport report);
    bool contains(const TreeSignature& sig) const { return index_.contains(sig); }
    const MotifReport* find(const TreeSignature& sig) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Insertion order.
    const std::vector<MotifReport>& entries() const { return entries_; }
    /// Ascending signature order.
    std::vector<MotifReport> sorted() const;

    bool truncated = false;

private:
    std::vector<MotifReport> entries_;
    std::unordered_map<TreeSignature, std::size_t, TreeSignatureHash> index_;
};

MotifCandidateSet remove_duplicates(std::span<const MotifReport> reports);

/// Every tree edge's color pair occurs on some edge of the model's graph.
bool is_consistent(const ColorfulTree& tree, const NullModel& model);
bool is_consistent(const ColorfulTree& tree, const ColoredGraph& g);

struct InferenceTrace {
    std::size_t phase_one_trees = 0;     // trees generated before any filter
    std::size_t evaluated = 0;           // consistent trees whose count was computed
    std::vector<std::size_t> survivors;  // per size, initial_size..goal_size
};

struct InferenceResult {
    MotifCandidateSet motifs;
    InferenceTrace trace;
};

/// Full report for one tree, or nullopt if it fails any filter.
std::optional<MotifReport> evaluate_motif(const ColoredGraph& g, const NullModel& model, const ColorfulTree& tree,
                                          const InferenceParams& params);

/*
 * Incremental inference: every consistent colorful tree on each
 * initial_size-subset of the colors is kept if it occurs at least
 * `threshold` times and scores at least `min_score`; survivors then grow one
 * leaf at a time (any tree vertex, any unused color) under the same filters
 * until goal_size. Results are keyed and ordered by signature.
 */
InferenceResult motif_inference(const ColoredGraph& g, const InferenceParams& params);

/// Same result as motif_inference, with every round's work spread round-robin
/// over params.worker_count threads between gather/dedupe barriers.
InferenceResult motif_inference_parallel(const ColoredGraph& g, const InferenceParams& params);

}  // namespace cmotif

#endif
