#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "superflats/sb_matrix.hpp"
#include "superflats/vertex_set.hpp"

namespace superflats {

// Simple undirected graph on vertices 0..n-1 (n <= 64).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const;  // edge count
  VertexSet vertices() const { return VertexSet::full(n_); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  // Label of v, or its index when unlabeled.
  std::string label(int v) const;

  // Labeled equality: same n and same edge set. Labels are ignored.
  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

inline constexpr int kInfinity = std::numeric_limits<int>::max();

SBMatrix adjacency_matrix(const Graph& g);
// A^c: 1 where a vertex pair is non-adjacent, including the diagonal.
SBMatrix complemented_adjacency(const Graph& g);

VertexSet star(const Graph& g, int v);
// Intersection of the stars of W; the full vertex set for W = ∅.
VertexSet star_of_set(const Graph& g, VertexSet w);
VertexSet closed_star(const Graph& g, int v);

struct Metrics {
  int girth = kInfinity;     // kInfinity when acyclic
  int diameter = kInfinity;  // kInfinity when disconnected
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  bool bipartite = false;
  bool cubic = false;
  int components = 0;
};
Metrics metrics(const Graph& g);

// All-pairs BFS distances; kInfinity for unreachable pairs.
std::vector<std::vector<int>> distances(const Graph& g);
int girth(const Graph& g);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
// Two-colouring sides when bipartite.
bool is_bipartite(const Graph& g, VertexSet* side = nullptr);
// Connectivity of the restriction to w.
bool induces_connected(const Graph& g, VertexSet w);

bool is_sober(const Graph& g);

struct SoberQuotient {
  Graph graph;
  std::vector<int> kept;        // quotient vertex -> original vertex
  std::vector<int> retraction;  // original vertex -> original representative
};
// Restriction to the least vertex of every star class. Throws
// PreconditionError on disconnected input.
SoberQuotient sober_quotient(const Graph& g);

struct SoberTreeCheck {
  bool sober = false;
  bool no_leaves_at_distance_two = false;
};
// Throws PreconditionError unless t is a tree. Both fields always agree on
// trees; callers compare them.
SoberTreeCheck sober_tree_check(const Graph& t);

Graph complement(const Graph& g);

struct Restriction {
  Graph graph;
  std::vector<int> kept;  // new index -> old index
};
Restriction restriction(const Graph& g, VertexSet w);
// h equals the restriction of g to w, with w listed in increasing order.
bool is_restriction(const Graph& h, const Graph& g, VertexSet w);
// Every edge of h is an edge of g under the increasing listing of w.
bool is_subgraph(const Graph& h, const Graph& g, VertexSet w);

Graph disjoint_union(const Graph& a, const Graph& b);
// new vertex perm[v] takes the role of old vertex v.
Graph relabel(const Graph& g, const std::vector<int>& perm);

int greedy_chromatic_upper_bound(const Graph& g);
// Exact chromatic number by iterative deepening. Throws SizeLimitError above
// limits().chromatic_vertices.
int exact_chromatic(const Graph& g);
std::vector<int> exact_coloring(const Graph& g);

}  // namespace superflats
