#include "cmotif/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace cmotif {

NullModel NullModel::fit(const ColoredGraph& g) {
    NullModel m;
    const std::size_t k = g.color_count();
    m.multiplicity_.assign(k, 0);
    m.pairs_.assign(k * k, 0);
    for (Color c = 0; c < k; ++c) m.multiplicity_[c] = g.vertices_of_color(c).size();
    for (const Edge& e : g.edges()) {
        const Color a = g.color_of(e.u);
        const Color b = g.color_of(e.v);
        ++m.pairs_[a * k + b];
        if (a != b) ++m.pairs_[b * k + a];
    }
    return m;
}

std::uint64_t NullModel::pair_count(Color a, Color b) const {
    const std::size_t k = color_count();
    if (a >= k || b >= k) return 0;
    return pairs_[a * k + b];
}

std::optional<double> NullModel::edge_probability(Color a, Color b) const {
    const double na = static_cast<double>(multiplicity(a));
    const double nb = static_cast<double>(multiplicity(b));
    const double slots = a == b ? na * (na - 1) / 2 : na * nb;
    if (slots <= 0) return std::nullopt;
    return static_cast<double>(pair_count(a, b)) / slots;
}

OccurrenceCount candidate_count(const NullModel& model, const ColorfulTree& tree) {
    OccurrenceCount n = 1;
    for (Color c : tree.graph().colors()) n *= model.multiplicity(c);
    return n;
}

OccurrenceProbability occurrence_probability(const NullModel& model, const ColorfulTree& tree) {
    OccurrenceProbability out;
    for (Color c : tree.graph().colors()) {
        if (model.multiplicity(c) == 0) out.missing_color = true;
    }
    if (out.missing_color) return out;
    out.value = 1.0;
    for (const Edge& e : tree.edges()) out.value *= model.p(tree.color_of(e.u), tree.color_of(e.v));
    return out;
}

double expected_occurrences(const NullModel& model, const ColorfulTree& tree) {
    const double mu = occurrence_probability(model, tree).value;
    return candidate_count(model, tree).convert_to<double>() * mu;
}

namespace {

using u128 = unsigned __int128;

/// Sum over intersection color sets I of m(I) * mu * (g(I) - mu), where
/// g(I) = mu / f(I) is the product of p over tree edges not inside I.
double variance_sum(const NullModel& model, const ColorfulTree& tree, double mu) {
    const std::size_t k = tree.size();
    std::vector<std::uint64_t> mult(k);
    double bits = 0;
    for (Vertex t = 0; t < k; ++t) {
        mult[t] = model.multiplicity(tree.color_of(t));
        bits += 2 * std::log2(static_cast<double>(mult[t]));
    }
    struct TreeEdge {
        std::uint64_t mask;
        double p;
    };
    std::vector<TreeEdge> edges;
    for (const Edge& e : tree.edges()) {
        edges.push_back({(std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v),
                         model.p(tree.color_of(e.u), tree.color_of(e.v))});
    }
    // m(I) <= |S|^2; exact in 128 bits unless |S|^2 is astronomically large
    const bool narrow = bits < 126;

    double total = 0.0;
    const std::uint64_t subsets = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        double m = 0.0;
        bool zero = false;
        if (narrow) {
            u128 acc = 1;
            for (Vertex t = 0; t < k && !zero; ++t) {
                const u128 n = mult[t];
                if (mask >> t & 1) {
                    acc *= n;
                } else {
                    if (n < 2) zero = true;
                    acc *= n * (n - 1);
                }
            }
            m = static_cast<double>(acc);
        } else {
            OccurrenceCount acc = 1;
            for (Vertex t = 0; t < k && !zero; ++t) {
                const std::uint64_t n = mult[t];
                if (mask >> t & 1) {
                    acc *= n;
                } else {
                    if (n < 2) zero = true;
                    acc *= OccurrenceCount(n) * (n - 1);
                }
            }
            m = acc.convert_to<double>();
        }
        if (zero) continue;
        double outside = 1.0;
        for (const TreeEdge& e : edges) {
            if ((mask & e.mask) != e.mask) outside *= e.p;
        }
        total += m * mu * (outside - mu);
    }
    return total;
}

}  // namespace

double variance_occurrences(const NullModel& model, const ColorfulTree& tree, std::size_t max_tree_size) {
    if (tree.size() > max_tree_size) {
        throw VarianceCapError("closed-form variance refused for a tree of " + std::to_string(tree.size()) +
                               " vertices (cap " + std::to_string(max_tree_size) +
                               "); estimate it with sample_statistics instead");
    }
    const auto prob = occurrence_probability(model, tree);
    if (prob.value == 0.0) return 0.0;
    return std::max(0.0, variance_sum(model, tree, prob.value));
}

double y_score_from(double eta_value, double expectation, double variance, double mu) {
    if (mu == 0.0 || eta_value <= expectation) return 0.0;
    const double d = eta_value - expectation;
    return std::clamp(1.0 - variance / (d * d), 0.0, 1.0);
}

std::optional<double> chebyshev_from(double eta_value, double expectation, double variance) {
    if (!(eta_value > expectation)) return std::nullopt;
    const double d = eta_value - expectation;
    return variance / (d * d);
}

MotifStats motif_stats(const NullModel& model, const ColorfulTree& tree, const OccurrenceCount& eta_value,
                       std::size_t max_tree_size) {
    MotifStats s;
    s.candidate_count = candidate_count(model, tree);
    const auto prob = occurrence_probability(model, tree);
    s.mu = prob.value;
    s.missing_color = prob.missing_color;
    s.expectation = s.candidate_count.convert_to<double>() * s.mu;
    s.variance = variance_occurrences(model, tree, max_tree_size);
    const double e = eta_value.convert_to<double>();
    s.y_score = y_score_from(e, s.expectation, s.variance, s.mu);
    s.chebyshev_bound = chebyshev_from(e, s.expectation, s.variance);
    return s;
}

double y_score(const NullModel& model, const ColorfulTree& tree, const OccurrenceCount& eta_value) {
    return motif_stats(model, tree, eta_value).y_score;
}

std::optional<double> chebyshev_bound(const NullModel& model, const ColorfulTree& tree,
                                      const OccurrenceCount& eta_value) {
    return motif_stats(model, tree, eta_value).chebyshev_bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ index;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

/// Accepts a uniform 64-bit draw with probability p.
class Coin {
public:
    explicit Coin(double p)
        : always_(p >= 1.0), never_(p <= 0.0), threshold_(always_ || never_ ? 0 : static_cast<std::uint64_t>(std::ldexp(p, 64))) {}
    template <class Rng>
    bool flip(Rng& rng) const {
        if (always_) return true;
        if (never_) return false;
        return rng() < threshold_;
    }

private:
    bool always_;
    bool never_;
    std::uint64_t threshold_;
};

void draw_pairs(const ColoredGraph& base, Color a, Color b, const Coin& coin, std::mt19937_64& rng,
                std::vector<Edge>& out) {
    auto as = base.vertices_of_color(a);
    auto bs = base.vertices_of_color(b);
    if (a == b) {
        for (std::size_t i = 0; i < as.size(); ++i) {
            for (std::size_t j = i + 1; j < as.size(); ++j) {
                if (coin.flip(rng)) out.push_back(Edge{as[i], as[j]});
            }
        }
        return;
    }
    for (Vertex u : as) {
        for (Vertex v : bs) {
            if (coin.flip(rng)) out.push_back(Edge{std::min(u, v), std::max(u, v)});
        }
    }
}

}  // namespace

ColoredGraph sample_random_graph(const NullModel& model, const ColoredGraph& base, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    const auto k = static_cast<Color>(base.color_count());
    for (Color a = 0; a < k; ++a) {
        for (Color b = a; b < k; ++b) {
            const double p = model.p(a, b);
            if (p <= 0.0) continue;
            draw_pairs(base, a, b, Coin(p), rng, edges);
        }
    }
    std::vector<Color> colors(base.colors().begin(), base.colors().end());
    return ColoredGraph::build(std::move(colors), edges, base.color_count());
}

SampleEstimate sample_statistics(const NullModel& model, const ColoredGraph& base, const ColorfulTree& tree,
                                 std::size_t samples, std::uint64_t seed, std::size_t workers) {
    if (samples == 0) throw std::invalid_argument("sample_statistics needs at least one sample");
    workers = std::max<std::size_t>(1, std::min(workers, samples));

    struct PairDraw {
        Color a, b;
        Coin coin;
    };
    std::vector<PairDraw> pairs;
    for (const Edge& e : tree.edges()) {
        const Color a = tree.color_of(e.u);
        const Color b = tree.color_of(e.v);
        pairs.push_back({a, b, Coin(model.p(a, b))});
    }
    const std::vector<Color> colors(base.colors().begin(), base.colors().end());

    SampleEstimate out;
    out.values.assign(samples, 0.0);
    auto run = [&](std::size_t first) {
        std::vector<Edge> edges;
        for (std::size_t i = first; i < samples; i += workers) {
            std::mt19937_64 rng(derive_seed(seed, i));
            edges.clear();
            for (const PairDraw& pd : pairs) draw_pairs(base, pd.a, pd.b, pd.coin, rng, edges);
            const ColoredGraph r = ColoredGraph::build(colors, edges, base.color_count());
            out.values[i] = eta(r, tree).convert_to<double>();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    long double sum = 0;
    for (double v : out.values) sum += v;
    const long double mean = sum / static_cast<long double>(samples);
    long double sq = 0;
    for (double v : out.values) sq += (v - mean) * (v - mean);
    out.mean = static_cast<double>(mean);
    out.variance = static_cast<double>(sq / static_cast<long double>(samples));
    return out;
}

}  // namespace cmotif
