#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

// graph6 codec, bit-exact per the format published with nauty: header
// char(s) encode n, then the upper triangle of the adjacency matrix
// column by column, six bits per printable character ('?'..'~').
// Accepts an optional ">>graph6<<" prefix and a trailing newline.
Graph parse_graph6(std::string_view line);

std::string write_graph6(const Graph& g);

// Convenience text input: first line "n m", then m lines "u v", 0-indexed.
Graph parse_edge_list(std::string_view text);

// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace toughham
