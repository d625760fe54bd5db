#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superflats/graph.hpp"

namespace superflats {

// Vertex-coloured undirected graph of any size, for the labelling engine.
struct ColoredGraph {
  std::vector<std::vector<int>> adj;
  std::vector<int> color;  // isomorphisms preserve colour values

  int order() const { return static_cast<int>(adj.size()); }
  static ColoredGraph from_graph(const Graph& g, std::vector<int> colors = {});
};

struct CanonicalLabeling {
  std::vector<int> position;  // vertex -> canonical position
  // Colours in canonical order followed by the sorted canonical edge list.
  // Equal certificates <=> isomorphic coloured graphs.
  std::vector<int> certificate;
  // Automorphism group generators found during the search.
  std::vector<std::vector<int>> automorphisms;
};

// Individualisation-refinement: colour refinement to an equitable
// partition, branching on the first smallest non-singleton cell, keeping
// the least leaf certificate, with orbit pruning from discovered
// automorphisms.
CanonicalLabeling canonical_labeling(const ColoredGraph& g);

// Isomorphism a -> b as a vertex map, if one exists.
std::optional<std::vector<int>> colored_isomorphism(const ColoredGraph& a, const ColoredGraph& b);

struct CanonicalForm {
  Graph graph;                 // canonically relabelled copy
  std::vector<int> position;   // vertex -> canonical index
  std::string key;             // graph6 of `graph`; equal keys <=> isomorphic
};
// Throws SizeLimitError above limits().canonical_vertices.
CanonicalForm canonical_form(const Graph& g);
bool graphs_isomorphic(const Graph& a, const Graph& b);
std::optional<std::vector<int>> graph_isomorphism(const Graph& a, const Graph& b);

}  // namespace superflats
