#pragma once

#include <string>
#include <vector>

#include "superflats/graph.hpp"

namespace superflats {

// One canonical representative per isomorphism class of graphs on exactly
// n vertices, sorted by graph6 key. Built by adding a vertex in every way
// to the classes on n-1 vertices. Practical up to n = 8.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> graphs_up_to(int max_n);
std::vector<Graph> connected_graphs(int n);

// Connected cubic graphs on exactly n vertices (n even), canonical and
// sorted. Backtracking over adjacency with untouched vertices taken in
// order.
std::vector<Graph> connected_cubic_graphs(int n);

// Every labelled graph on n vertices as one graph6 line each (2^(n(n-1)/2)
// lines). For cross-checking the generator through the stream reader.
std::string labelled_graph6_stream(int n);

// Canonical representatives of `graphs`, deduplicated and sorted.
std::vector<Graph> canonical_classes(const std::vector<Graph>& graphs);

}  // namespace superflats
