#include <doctest.h>

#include <random>

#include "cmotif/io.hpp"
#include "support/fixtures.hpp"

using namespace cmotif;

namespace {

std::size_t error_line(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("empty documents") {
    const GraphDocument empty = parse_graph("");
    CHECK(empty.graph.vertex_count() == 0);
    CHECK(empty.color_names.empty());
    const GraphDocument only_colors = parse_graph("# colors only\nc 0 red\nc 1 blue\n");
    CHECK(only_colors.graph.vertex_count() == 0);
    CHECK(only_colors.graph.color_count() == 2);
}

TEST_CASE("names and ids both resolve vertex colors") {
    const GraphDocument doc = parse_graph("c 0 red\nc 1 blue\nv 0 red\nv 1 1   # trailing comment\n\ne 1 0\n");
    CHECK(doc.graph.color_of(0) == 0);
    CHECK(doc.graph.color_of(1) == 1);
    CHECK(doc.graph.edges()[0] == Edge{0, 1});
    CHECK(doc.color_id("blue") == 1u);
    CHECK_FALSE(doc.color_id("green").has_value());
    CHECK(serialize_graph(doc) == "c 0 red\nc 1 blue\nv 0 0\nv 1 1\ne 0 1\n");
}

TEST_CASE("malformed input names the line") {
    CHECK(error_line("c 0 a\nv 0 a\nv 1 a\ne 0 5\n") == 4);
    CHECK(error_line("c 0 a\nv 0 a\nv 1 green\n") == 3);
    CHECK(error_line("c 0 a\nv 0 7\n") == 2);
    CHECK(error_line("c 0 a\nv 0 a\nv 1 a\ne 0 1\ne 1 0\n") == 5);
    CHECK(error_line("c 0 a\nv 0 a\ne 0 0\n") == 3);
    CHECK(error_line("c 0 a\nx 1 2\n") == 2);
    CHECK(error_line("c 0 a\nv 0\n") == 2);
    CHECK(error_line("c 0 a\nv -1 a\n") == 2);
    CHECK(error_line("c 0 a\nc 0 b\n") == 2);
    CHECK(error_line("c 0 a\nc 1 a\n") == 2);
    CHECK(error_line("c 0 a\nv 0 a\nv 0 a\n") == 3);
    CHECK(error_line("c 1 a\n") > 0);
    CHECK(error_line("c 0 a\nv 1 a\n") > 0);
    try {
        parse_graph("c 0 a\nv 0 a\nv 1 mauve\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("mauve") != std::string::npos);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("canonical serialization round-trips") {
    std::mt19937_64 rng(500);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const GraphDocument doc = document_for(testing::random_graph(rng, n, k, 0.2));
        const std::string text = serialize_graph(doc);
        const GraphDocument back = parse_graph(text);
        CHECK(back == doc);
        CHECK(serialize_graph(back) == text);
    }
}

TEST_CASE("color lists") {
    CHECK(parse_color_list("a b\n# skip\nc  # d\n\n e") == std::vector<std::string>{"a", "b", "c", "e"});
    CHECK(parse_color_list("").empty());
}
