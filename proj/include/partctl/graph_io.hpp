#pragma once

#include <iosfwd>
#include <string>

#include "partctl/graph.hpp"

namespace partctl {

// Text format: first non-comment line "n m", then m lines "u v"
// (0-indexed). Lines starting with '#' are comments. Throws ParseError.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Writes edges in id order, min endpoint first.
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace partctl
