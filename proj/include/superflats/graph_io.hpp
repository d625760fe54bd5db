#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superflats/graph.hpp"

namespace superflats {

// Edge-list text: first token n, then pairs "u v" (0-based). '#' starts a
// comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Standard graph6 (optional ">>graph6<<" header).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
// One graph per non-empty line.
std::vector<Graph> parse_graph6_stream(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace superflats
