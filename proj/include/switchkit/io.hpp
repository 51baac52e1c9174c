#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "switchkit/graph.hpp"

namespace switchkit {

/// Decode one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Every non-empty line of the stream as a graph6 graph.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// "n m" header followed by m lines "u v" with 0-indexed endpoints.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace switchkit
