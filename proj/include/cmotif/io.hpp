#ifndef CMOTIF_IO_HPP
#define CMOTIF_IO_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cmotif/graph.hpp"

namespace cmotif {

/*
 * Text form of a colored graph (.cg), one record per line:
 *
 *   # comment
 *   c <color-id> <name>
 *   v <vertex-id> <color-id or color name>
 *   e <u> <v>
 *
 * Color ids and vertex ids must each be exactly 0..k-1 / 0..n-1. The
 * canonical serialization lists colors, then vertices, then edges, all in
 * ascending order with u < v.
 */
struct GraphDocument {
    std::vector<std::string> color_names;
    ColoredGraph graph;

    /// Id of a color name, or nullopt.
    std::optional<Color> color_id(std::string_view name) const;

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason);
    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

GraphDocument parse_graph(std::string_view text);
std::string serialize_graph(const GraphDocument& doc);

/// Document for a graph built in code; colors are named by their ids.
GraphDocument document_for(ColoredGraph g);

GraphDocument read_graph_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Color names separated by whitespace or newlines; `#` starts a comment.
std::vector<std::string> parse_color_list(std::string_view text);

}  // namespace cmotif

#endif
