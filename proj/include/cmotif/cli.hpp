#ifndef CMOTIF_CLI_HPP
#define CMOTIF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cmotif/graph.hpp"
#include "cmotif/io.hpp"

namespace cmotif {

/// Entry point of the `cmotif` tool. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Tree read from a .cg document, recolored into the graph's color universe
/// by color name. Names unknown to the graph get fresh ids past its range.
ColorfulTree align_tree(const GraphDocument& graph, const GraphDocument& tree);

/// "a-b,b-c" using color names; the edge-less tree prints its single color.
std::string format_signature(const TreeSignature& sig, const std::vector<std::string>& names);

}  // namespace cmotif

#endif
