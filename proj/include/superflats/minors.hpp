#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superflats/graph.hpp"
#include "superflats/sb_matrix.hpp"

namespace superflats {

struct MinorOp {
  enum class Kind { delete_vertex, delete_edge, contract };
  Kind kind = Kind::delete_vertex;
  int u = 0;
  int v = -1;  // unused for delete_vertex

  static MinorOp delete_vertex(int v) { return {Kind::delete_vertex, v, -1}; }
  static MinorOp delete_edge(int u, int v) { return {Kind::delete_edge, u, v}; }
  static MinorOp contract(int u, int v) { return {Kind::contract, u, v}; }
  std::string to_string() const;
};

// Vertex deletion and contraction renumber the surviving vertices in
// increasing order; contraction keeps the smaller endpoint. Throws
// PreconditionError on a missing vertex or edge.
Graph apply_minor_op(const Graph& g, const MinorOp& op);

// Partitions of V whose blocks each induce a connected subgraph, blocks
// ordered by least vertex. Limit: minor_vertices.
using ConnectedPartition = std::vector<VertexSet>;
std::vector<ConnectedPartition> connected_partitions(const Graph& g);

// g/P as a simple graph: block i adjacent to block j when some edge
// joins them.
Graph quotient(const Graph& g, const ConnectedPartition& p);

// Branch sets of an h-minor in g, indexed by vertex of h, or none.
// Limit: minor_vertices on g.
std::optional<std::vector<VertexSet>> find_minor(const Graph& h, const Graph& g);
bool is_minor(const Graph& h, const Graph& g);

enum class Wild { zero, one, star };

class WildcardMatrix {
 public:
  explicit WildcardMatrix(int side = 0) : side_(side), cells_(static_cast<std::size_t>(side) * side, Wild::one) {}
  int side() const { return side_; }
  Wild at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * side_ + j]; }
  void set(int i, int j, Wild w) { cells_[static_cast<std::size_t>(i) * side_ + j] = w; }
  int star_count() const;
  // Stars replaced in row-major order by the bits of `choice` (bit set = one).
  SBMatrix resolve(std::uint64_t choice) const;
  std::string to_string() const;  // rows of 0/1/*

 private:
  int side_;
  std::vector<Wild> cells_;
};

// Diagonal one; off-diagonal star when an edge joins the two blocks, one
// otherwise.
WildcardMatrix contracted_wildcard_matrix(const Graph& g, const ConnectedPartition& p);

struct WildcardWitness {
  int rank = 0;
  // Triangular order: rows[r] hits cols[r] with one/star and is zero/star
  // on cols[r+1..].
  std::vector<int> rows, cols;
};
// Largest k with a k x k submatrix that can be made nonsingular by
// choosing each star independently. Limit: wildcard_side.
WildcardWitness wildcard_rank_witness(const WildcardMatrix& m);
int wildcard_rank(const WildcardMatrix& m);

struct CmRankResult {
  int rank = 0;
  ConnectedPartition partition;  // partition attaining the rank
  Graph minor;                   // minor of g with c-rank equal to rank
};
// Max over connected partitions of the wildcard rank of the contracted
// matrix, with a minor realizing it. Limit: cm_rank_vertices.
CmRankResult cm_rank_certified(const Graph& g);
int cm_rank(const Graph& g);

// Representatives of the graphs with at most 2m vertices and c-rank m+1
// (a single vertex for m = 0), in canonical form and sorted by graph6
// key. `source`, when given, replaces internal generation (e.g. graphs
// read from an external graph6 stream); it must cover every graph on up
// to 2m vertices.
std::vector<Graph> forbidden_family(int m, const std::vector<Graph>* source = nullptr);

}  // namespace superflats
