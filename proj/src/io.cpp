#include "cmotif/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace cmotif {

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

std::optional<Color> GraphDocument::color_id(std::string_view name) const {
    for (std::size_t i = 0; i < color_names.size(); ++i) {
        if (color_names[i] == name) return static_cast<Color>(i);
    }
    return std::nullopt;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::uint32_t> parse_id(std::string_view tok) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

}  // namespace

GraphDocument parse_graph(std::string_view text) {
    struct Pending {
        std::size_t line;
        std::string_view token;
    };
    std::vector<std::optional<std::string>> names;
    std::vector<std::optional<Pending>> vertex_color;
    std::vector<std::pair<Edge, std::size_t>> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = split_ws(line);
        if (tok.empty()) {
            if (end == text.size()) break;
            continue;
        }
        auto need = [&](std::size_t n) {
            if (tok.size() != n) {
                throw ParseError(line_no, "'" + std::string(tok[0]) + "' record expects " + std::to_string(n - 1) +
                                              " fields, got " + std::to_string(tok.size() - 1));
            }
        };
        auto id = [&](std::string_view t, const char* what) {
            auto v = parse_id(t);
            if (!v) throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(t) + "'");
            return *v;
        };
        if (tok[0] == "c") {
            need(3);
            const auto c = id(tok[1], "color id");
            if (c >= names.size()) names.resize(c + 1);
            if (names[c]) throw ParseError(line_no, "color " + std::to_string(c) + " declared twice");
            for (const auto& n : names) {
                if (n && *n == tok[2]) throw ParseError(line_no, "color name '" + std::string(tok[2]) + "' declared twice");
            }
            names[c] = std::string(tok[2]);
        } else if (tok[0] == "v") {
            need(3);
            const auto v = id(tok[1], "vertex id");
            if (v >= vertex_color.size()) vertex_color.resize(v + 1);
            if (vertex_color[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " declared twice");
            vertex_color[v] = Pending{line_no, tok[2]};
        } else if (tok[0] == "e") {
            need(3);
            const auto u = id(tok[1], "vertex id");
            const auto v = id(tok[2], "vertex id");
            if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(Edge{std::min(u, v), std::max(u, v)}, line_no);
        } else {
            throw ParseError(line_no, "unknown record type '" + std::string(tok[0]) + "'");
        }
        if (end == text.size()) break;
    }

    GraphDocument doc;
    for (std::size_t c = 0; c < names.size(); ++c) {
        if (!names[c]) throw ParseError(line_no, "color ids must be contiguous; color " + std::to_string(c) + " missing");
        doc.color_names.push_back(*names[c]);
    }
    std::vector<Color> colors;
    colors.reserve(vertex_color.size());
    for (std::size_t v = 0; v < vertex_color.size(); ++v) {
        if (!vertex_color[v]) {
            throw ParseError(line_no, "vertex ids must be contiguous; vertex " + std::to_string(v) + " missing");
        }
        const Pending& p = *vertex_color[v];
        if (auto c = parse_id(p.token)) {
            if (*c >= doc.color_names.size()) throw ParseError(p.line, "unknown color id " + std::to_string(*c));
            colors.push_back(*c);
        } else if (auto c2 = doc.color_id(p.token)) {
            colors.push_back(*c2);
        } else {
            throw ParseError(p.line, "unknown color name '" + std::string(p.token) + "'");
        }
    }
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return edges[a].first != edges[b].first ? edges[a].first < edges[b].first : edges[a].second < edges[b].second;
    });
    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& [e, line] = edges[order[i]];
        if (e.v >= colors.size()) {
            throw ParseError(line, "edge references undeclared vertex " + std::to_string(e.v));
        }
        if (i > 0 && edges[order[i - 1]].first == e) {
            throw ParseError(line, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
        plain.push_back(e);
    }
    doc.graph = ColoredGraph::build(std::move(colors), plain, doc.color_names.size());
    return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
    std::ostringstream out;
    const ColoredGraph& g = doc.graph;
    for (Color c = 0; c < g.color_count(); ++c) {
        out << "c " << c << ' ' << (c < doc.color_names.size() ? doc.color_names[c] : std::to_string(c)) << '\n';
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "v " << v << ' ' << g.color_of(v) << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

GraphDocument document_for(ColoredGraph g) {
    GraphDocument doc;
    for (Color c = 0; c < g.color_count(); ++c) doc.color_names.push_back(std::to_string(c));
    doc.graph = std::move(g);
    return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphDocument read_graph_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_graph(text);
    } catch (const ParseError& e) {
        throw std::runtime_error(path.string() + ":" + std::to_string(e.line()) + ": " + e.reason());
    }
}

std::vector<std::string> parse_color_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        for (auto tok : split_ws(line)) out.emplace_back(tok);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

}  // namespace cmotif
