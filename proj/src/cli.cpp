#include "cmotif/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "cmotif/clean.hpp"
#include "cmotif/count.hpp"
#include "cmotif/enumerate.hpp"
#include "cmotif/inference.hpp"
#include "cmotif/search.hpp"
#include "cmotif/stats.hpp"
#include "cmotif/tree_gen.hpp"

namespace cmotif {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string color_name(Color c, const std::vector<std::string>& names) {
    return c < names.size() ? names[c] : std::to_string(c);
}

std::vector<Color> resolve_colors(const GraphDocument& doc, const std::vector<std::string>& names) {
    std::vector<Color> out;
    for (const auto& n : names) {
        auto id = doc.color_id(n);
        if (!id) throw std::invalid_argument("color '" + n + "' does not occur in the graph's color table");
        out.push_back(*id);
    }
    return out;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        if (end > pos) out.push_back(s.substr(pos, end - pos));
        pos = end + 1;
    }
    return out;
}

void write_occurrence(std::ostream& out, const Occurrence& occ) {
    out << "occurrence";
    for (Vertex v : occ.vertices) out << ' ' << v;
    out << " |";
    for (const Edge& e : occ.edges) out << ' ' << e.u << '-' << e.v;
    out << '\n';
}

std::size_t default_workers() {
    if (const char* env = std::getenv("MOTIF_WORKERS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

ColorfulTree align_tree(const GraphDocument& graph, const GraphDocument& tree) {
    std::vector<Color> colors;
    Color fresh = static_cast<Color>(graph.color_names.size());
    std::map<std::string, Color> extra;
    for (Color c : tree.graph.colors()) {
        const std::string& name = tree.color_names.at(c);
        if (auto id = graph.color_id(name)) {
            colors.push_back(*id);
        } else {
            auto [it, fresh_name] = extra.try_emplace(name, fresh);
            if (fresh_name) ++fresh;
            colors.push_back(it->second);
        }
    }
    return ColorfulTree::build(std::move(colors), tree.graph.edges());
}

std::string format_signature(const TreeSignature& sig, const std::vector<std::string>& names) {
    if (sig.edges.empty()) return sig.lone_color ? color_name(*sig.lone_color, names) : std::string{};
    std::string out;
    for (const ColorPair& p : sig.edges) {
        if (!out.empty()) out += ',';
        out += color_name(p.first, names) + '-' + color_name(p.second, names);
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Search, count, enumerate, and score colorful tree motifs in vertex-colored graphs", "cmotif"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string tree_path;
    std::string colors_path;
    std::string colors_inline;
    std::string out_path;
    std::uint64_t seed = 0;
    std::size_t limit = 0;
    std::size_t samples = 0;
    std::size_t workers = default_workers();
    std::size_t var_cap = kDefaultVarianceCap;
    std::size_t initial = 0;
    std::size_t goal = 0;
    std::size_t gen_size = 0;
    std::uint64_t threshold = 0;
    double score = 0.0;
    std::size_t cap = 0;
    bool witness = false;
    bool group = false;

    auto* search = app.add_subcommand("search", "decide whether the tree occurs in the graph");
    search->add_option("-g,--graph", graph_path, "graph file (.cg)")->required();
    search->add_option("-t,--tree", tree_path, "tree file (.cg)")->required();
    search->add_flag("--witness", witness, "print one occurrence");

    auto* clean = app.add_subcommand("clean", "maximum clean subgraph regarding the tree, as .cg");
    clean->add_option("-g,--graph", graph_path)->required();
    clean->add_option("-t,--tree", tree_path)->required();
    clean->add_option("-o,--output", out_path, "write here instead of stdout");

    auto* enumerate = app.add_subcommand("enum", "list every occurrence");
    enumerate->add_option("-g,--graph", graph_path)->required();
    enumerate->add_option("-t,--tree", tree_path)->required();
    enumerate->add_option("--limit", limit, "stop after N occurrences (0: unlimited)");

    auto* count = app.add_subcommand("count", "number of occurrences");
    count->add_option("-g,--graph", graph_path)->required();
    auto* count_tree = count->add_option("-t,--tree", tree_path);
    auto* count_colors = count->add_option("--colors", colors_inline, "comma-separated colors: sum over all trees");
    count_tree->excludes(count_colors);

    auto* stats = app.add_subcommand("stats", "null-model statistics of the tree");
    stats->add_option("-g,--graph", graph_path)->required();
    stats->add_option("-t,--tree", tree_path)->required();
    stats->add_option("--var-cap", var_cap, "largest tree for the closed-form variance");

    auto* sample = app.add_subcommand("sample", "draw random graphs from the fitted null model");
    sample->add_option("-g,--graph", graph_path)->required();
    sample->add_option("-t,--tree", tree_path, "estimate count statistics of this tree");
    sample->add_option("--samples", samples, "number of graphs to draw (with --tree)");
    sample->add_option("--seed", seed);
    sample->add_option("--workers", workers);
    sample->add_option("-o,--output", out_path, "write the sampled graph here instead of stdout");

    auto* infer = app.add_subcommand("infer", "incremental motif inference");
    infer->add_option("-g,--graph", graph_path)->required();
    infer->add_option("-C,--colors", colors_path, "file listing the colors of interest")->required();
    infer->add_option("-s,--initial", initial, "initial motif size")->required();
    infer->add_option("-G,--goal", goal, "goal motif size")->required();
    infer->add_option("-T,--threshold", threshold, "minimum number of occurrences")->required();
    infer->add_option("-y,--score", score, "minimum y-score")->required();
    infer->add_option("--workers", workers, "worker threads (default: MOTIF_WORKERS or 1)");
    infer->add_option("--cap", cap, "keep at most N motifs per round (0: unlimited)");
    infer->add_option("--seed", seed, "accepted for uniformity; inference is deterministic");
    infer->add_option("--var-cap", var_cap);
    infer->add_flag("--group", group, "also summarize motifs by color set");

    auto* gen = app.add_subcommand("gen-trees", "every labelled tree on a color set");
    auto* gen_colors = gen->add_option("--colors", colors_inline, "comma-separated color names");
    auto* gen_n = gen->add_option("-s,--size", gen_size, "use colors 0..s-1");
    gen_colors->excludes(gen_n);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (search->parsed()) {
            const GraphDocument g = read_graph_file(graph_path);
            const ColorfulTree t = align_tree(g, read_graph_file(tree_path));
            if (!witness) {
                out << (tcg_decide(g.graph, t) ? "yes" : "no") << '\n';
                return 0;
            }
            auto occ = tcg_extract(g.graph, t);
            out << (occ ? "yes" : "no") << '\n';
            if (occ) write_occurrence(out, *occ);
            return 0;
        }
        if (clean->parsed()) {
            const GraphDocument g = read_graph_file(graph_path);
            const ColorfulTree t = align_tree(g, read_graph_file(tree_path));
            const CleanSubgraph h = mcg(g.graph, t);
            std::vector<Vertex> ids;
            GraphDocument doc{g.color_names, h.to_graph(&ids)};
            std::string text = "# clean subgraph: " + std::to_string(h.alive_vertex_count()) + " vertices, " +
                               std::to_string(h.alive_edge_count()) + " edges\n";
            for (Vertex i = 0; i < ids.size(); ++i) {
                text += "# vertex " + std::to_string(i) + " was " + std::to_string(ids[i]) + "\n";
            }
            text += serialize_graph(doc);
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream(out_path, std::ios::binary) << text;
            }
            return 0;
        }
        if (enumerate->parsed()) {
            const GraphDocument g = read_graph_file(graph_path);
            const ColorfulTree t = align_tree(g, read_graph_file(tree_path));
            const CleanSubgraph h = mcg(g.graph, t);
            OccurrenceStream stream(h, t, EnumerateOptions{limit});
            while (auto occ = stream.next()) write_occurrence(out, *occ);
            out << "count " << stream.emitted() << '\n';
            out << "truncated " << (stream.truncated() ? "yes" : "no") << '\n';
            return 0;
        }
        if (count->parsed()) {
            const GraphDocument g = read_graph_file(graph_path);
            if (!colors_inline.empty()) {
                const auto colors = resolve_colors(g, split_commas(colors_inline));
                out << "eta " << eta_colorset(g.graph, colors) << '\n';
                return 0;
            }
            if (tree_path.empty()) throw std::invalid_argument("count needs --tree or --colors");
            const ColorfulTree t = align_tree(g, read_graph_file(tree_path));
            out << "eta " << eta(g.graph, t) << '\n';
            return 0;
        }
        if (stats->parsed()) {
            const GraphDocument g = read_graph_file(graph_path);
            const ColorfulTree t = align_tree(g, read_graph_file(tree_path));
            const NullModel model = NullModel::fit(g.graph);
            const OccurrenceCount n = eta(g.graph, t);
            const MotifStats st = motif_stats(model, t, n, var_cap);
            out << "eta " << n << '\n';
            out << "candidates " << st.candidate_count << '\n';
            out << "mu " << num(st.mu) << '\n';
            out << "expectation " << num(st.expectation) << '\n';
            out << "variance " << num(st.variance) << '\n';
            out << "y " << num(st.y_score) << '\n';
            out << "chebyshev " << (st.chebyshev_bound ? num(*st.chebyshev_bound) : std::string("none")) << '\n';
            if (st.missing_color) err << "warning: a tree color has no vertex in the graph\n";
            return 0;
        }
        if (sample->parsed()) {
            const GraphDocument g = read_graph_file(graph_path);
            const NullModel model = NullModel::fit(g.graph);
            if (!tree_path.empty()) {
                if (samples == 0) throw std::invalid_argument("--samples must be at least 1");
                const ColorfulTree t = align_tree(g, read_graph_file(tree_path));
                const SampleEstimate est = sample_statistics(model, g.graph, t, samples, seed, workers);
                out << "samples " << samples << '\n';
                out << "mean " << num(est.mean) << '\n';
                out << "variance " << num(est.variance) << '\n';
                return 0;
            }
            const GraphDocument doc{g.color_names, sample_random_graph(model, g.graph, seed)};
            if (out_path.empty()) {
                out << serialize_graph(doc);
            } else {
                std::ofstream(out_path, std::ios::binary) << serialize_graph(doc);
            }
            return 0;
        }
        if (infer->parsed()) {
            const GraphDocument g = read_graph_file(graph_path);
            InferenceParams params;
            params.colors = resolve_colors(g, parse_color_list(read_text_file(colors_path)));
            params.initial_size = initial;
            params.goal_size = goal;
            params.threshold = threshold;
            params.min_score = score;
            params.worker_count = workers;
            params.variance_cap = var_cap;
            if (cap > 0) params.memory_cap = cap;
            const InferenceResult res = motif_inference_parallel(g.graph, params);

            std::vector<MotifReport> motifs = res.motifs.sorted();
            std::stable_sort(motifs.begin(), motifs.end(),
                             [](const MotifReport& a, const MotifReport& b) { return a.y_score > b.y_score; });
            for (const MotifReport& m : motifs) {
                out << "motif " << format_signature(m.signature, g.color_names) << " eta " << m.eta
                    << " expectation " << num(m.expectation) << " variance " << num(m.variance) << " y "
                    << num(m.y_score) << '\n';
            }
            if (group) {
                std::map<std::vector<Color>, std::size_t> groups;
                for (const MotifReport& m : motifs) ++groups[tree_from_signature(m.signature).color_set()];
                std::vector<std::pair<std::vector<Color>, std::size_t>> ordered(groups.begin(), groups.end());
                std::stable_sort(ordered.begin(), ordered.end(),
                                 [](const auto& a, const auto& b) { return a.second > b.second; });
                for (const auto& [colors, n] : ordered) {
                    out << "group ";
                    for (std::size_t i = 0; i < colors.size(); ++i) {
                        out << (i ? "," : "") << color_name(colors[i], g.color_names);
                    }
                    out << " motifs " << n << '\n';
                }
            }
            out << "total " << motifs.size() << '\n';
            out << "truncated " << (res.motifs.truncated ? "yes" : "no") << '\n';
            return 0;
        }
        if (gen->parsed()) {
            std::vector<std::string> names;
            std::vector<Color> colors;
            if (!colors_inline.empty()) {
                names = split_commas(colors_inline);
            } else {
                for (std::size_t i = 0; i < gen_size; ++i) names.push_back(std::to_string(i));
            }
            for (Color c = 0; c < names.size(); ++c) colors.push_back(c);
            ColorfulTreeGenerator trees(colors);
            std::size_t n = 0;
            while (auto t = trees.next()) {
                out << "tree " << format_signature(signature(*t), names) << '\n';
                ++n;
            }
            out << "total " << n << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace cmotif
