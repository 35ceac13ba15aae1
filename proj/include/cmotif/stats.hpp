#ifndef CMOTIF_STATS_HPP
#define CMOTIF_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cmotif/count.hpp"
#include "cmotif/graph.hpp"

namespace cmotif {

/*
 * Color-aware random graph model fitted from a graph: every unordered vertex
 * pair {x, y} becomes an edge independently with probability
 * p(c(x), c(y)), the observed edge density between the two color classes.
 * For distinct colors that is |(a,b)| / (|a||b|); within one color class it
 * is |(a,a)| / C(|a|, 2).
 */
class NullModel {
public:
    static NullModel fit(const ColoredGraph& g);

    std::size_t color_count() const { return multiplicity_.size(); }
    std::uint64_t multiplicity(Color a) const { return a < color_count() ? multiplicity_[a] : 0; }
    std::uint64_t pair_count(Color a, Color b) const;
    /// nullopt when either class is too small to host a pair.
    std::optional<double> edge_probability(Color a, Color b) const;
    /// edge_probability, with undefined pairs read as 0.
    double p(Color a, Color b) const { return edge_probability(a, b).value_or(0.0); }

private:
    std::vector<std::uint64_t> multiplicity_;
    std::vector<std::uint64_t> pairs_;  // color_count^2, symmetric
};

/// Number of candidate vertex sets: product of the multiplicities of the tree's colors.
OccurrenceCount candidate_count(const NullModel& model, const ColorfulTree& tree);

struct OccurrenceProbability {
    double value = 0.0;
    /// Some color of the tree has no vertex in the model; value is 0.
    bool missing_color = false;
};

/// Probability that a fixed candidate is an occurrence: product of p over tree edges.
OccurrenceProbability occurrence_probability(const NullModel& model, const ColorfulTree& tree);

double expected_occurrences(const NullModel& model, const ColorfulTree& tree);

class VarianceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultVarianceCap = 20;

/*
 * Exact variance of the occurrence count under the model. Pairs of
 * candidates are grouped by the color set I of their intersection: there
 * are m(I) ordered such pairs and each is jointly an occurrence with
 * probability mu^2 / f(I), f(I) being the product of p over tree edges
 * inside I. Summing m(I) mu (mu / f(I) - mu) over all I gives
 * E[X^2] - E[X]^2 without the cancellation of the subtracted form.
 * Throws VarianceCapError when the tree has more than `max_tree_size` vertices.
 */
double variance_occurrences(const NullModel& model, const ColorfulTree& tree,
                            std::size_t max_tree_size = kDefaultVarianceCap);

/// max(0, 1 - var / (eta - e)^2), and 0 whenever eta <= e or mu == 0.
double y_score_from(double eta_value, double expectation, double variance, double mu);
/// var / (eta - e)^2 when eta > e.
std::optional<double> chebyshev_from(double eta_value, double expectation, double variance);

double y_score(const NullModel& model, const ColorfulTree& tree, const OccurrenceCount& eta_value);
std::optional<double> chebyshev_bound(const NullModel& model, const ColorfulTree& tree,
                                      const OccurrenceCount& eta_value);

struct MotifStats {
    OccurrenceCount candidate_count;
    double mu = 0.0;
    double expectation = 0.0;
    double variance = 0.0;
    double y_score = 0.0;
    std::optional<double> chebyshev_bound;
    bool missing_color = false;
};

/// All statistics for one tree in a single pass (the variance is computed once).
MotifStats motif_stats(const NullModel& model, const ColorfulTree& tree, const OccurrenceCount& eta_value,
                       std::size_t max_tree_size = kDefaultVarianceCap);

/// Seed of the i-th sample: splitmix64 finalizer applied to seed ^ i.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Draws a graph on base's vertices and colors; deterministic in `seed`.
ColoredGraph sample_random_graph(const NullModel& model, const ColoredGraph& base, std::uint64_t seed);

struct SampleEstimate {
    double mean = 0.0;
    double variance = 0.0;
    std::vector<double> values;  // occurrence count per sample, in sample order
};

/*
 * Monte-Carlo mean and (population) variance of the occurrence count over
 * `samples` graphs drawn from the model. Only the color pairs on tree edges
 * influence the count, so only those pairs are drawn. Sample i uses
 * derive_seed(seed, i); the result does not depend on `workers`.
 */
SampleEstimate sample_statistics(const NullModel& model, const ColoredGraph& base, const ColorfulTree& tree,
                                 std::size_t samples, std::uint64_t seed, std::size_t workers = 1);

}  // namespace cmotif

#endif
