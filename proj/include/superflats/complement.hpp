#pragma once

#include <optional>

#include "superflats/graph.hpp"

namespace superflats {

struct RankSumReport {
  int n = 0;
  int c_rank = 0;
  int complement_c_rank = 0;
  int sum = 0;
  int chromatic = 0;
  double sqrt2_bound = 0;        // sqrt(2) n + 1, for display only
  bool sqrt2_bound_holds = false;  // sum < sqrt(2) n + 1, decided exactly
  bool chromatic_bound_holds = false;  // complement_c_rank * chromatic >= n
  bool holds() const { return sqrt2_bound_holds && chromatic_bound_holds; }
};
// Limit: chromatic_vertices.
RankSumReport rank_sum_report(const Graph& g);

// c-rank of the complement, directly and through the dual lattice of
// closed stars. Throws std::logic_error if the two differ.
int complement_rank_both_ways(const Graph& g);

// Every edgeless vertex set of g is c-independent in the complement.
bool classical_independents_are_c_independent_in_complement(const Graph& g);

struct ConverseCounterexample {
  Graph graph;
  VertexSet set;  // c-independent in the complement, spans an edge of graph
};
// Smallest graph (by order, then canonical key) with such a set.
std::optional<ConverseCounterexample> find_converse_counterexample(int max_n);

}  // namespace superflats
