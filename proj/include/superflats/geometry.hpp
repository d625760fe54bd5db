#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superflats/graph.hpp"
#include "superflats/set_lattice.hpp"

namespace superflats {

// Point/line system satisfying
//   G1 every point lies on some line,
//   G2 distinct lines share at most one point,
//   G3 every line has at least two points.
// Points are 0..points-1; lines are point sets. At most 64 points and 64
// lines.
class PEG {
 public:
  PEG() = default;
  // Throws AxiomError naming the first violated axiom and a witness.
  PEG(int points, std::vector<VertexSet> lines);

  int points() const { return points_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<VertexSet>& lines() const { return lines_; }
  VertexSet line(int i) const { return lines_[i]; }
  // Indices of the lines through p.
  VertexSet pencil(int p) const { return pencils_[p]; }
  // Minimum degree of the Levi graph.
  int min_degree() const;

 private:
  int points_ = 0;
  std::vector<VertexSet> lines_;
  std::vector<VertexSet> pencils_;
};

PEG validate_peg(int points, std::vector<VertexSet> lines);

// "points n" followed by one line per geometric line (point indices).
PEG parse_peg(std::string_view text);
std::string to_peg_text(const PEG& p);

// Lines are the flats other than V with at least two vertices. Throws
// DomainError unless g is sober, connected and of c-rank 3.
PEG geo(const Graph& g);

// A graph as a PEG: vertices are points, edges are lines. Throws
// AxiomError when g has an isolated vertex.
PEG graph_as_peg(const Graph& g);

struct ConfigurationSignature {
  int m = 0;  // points
  int c = 0;  // lines per point
  int n = 0;  // lines
  int d = 0;  // points per line
  bool operator==(const ConfigurationSignature&) const = default;
};
std::optional<ConfigurationSignature> configuration_signature(const PEG& p);

// Bipartite incidence graph: points 0..P-1 then lines P..P+L-1.
Graph levi(const PEG& p);
bool peg_connected(const PEG& p);
bool peg_is_sober(const PEG& p);
// Throws PreconditionError unless min_degree() >= 2.
PEG dual_peg(const PEG& p);
// Isomorphism of point/line structures (Levi graphs with points and lines
// kept apart).
bool peg_isomorphic(const PEG& a, const PEG& b);

// Intersection closure of the lines inside 2^P, with P on top.
SetLattice lat_peg(const PEG& p);

struct LeviFlatsReport {
  bool levi_closed = false;
  bool four_part_union = false;   // Fl Levi = {all, ∅} ∪ singletons ∪ lines ∪ pencils
  bool jordan_dedekind = false;
  bool coproduct_matches = false; // components ≅ Lat G and Lat G^d
  int components = 0;
  int flats = 0;
  bool all() const { return levi_closed && four_part_union && jordan_dedekind && coproduct_matches; }
};
// Throws DomainError unless p is sober, connected and min_degree() >= 2.
LeviFlatsReport flats_of_levi_structure(const PEG& p);

// Levi vertex sets of size <= 2, plus 3-sets meeting some line in exactly
// two points or some pencil in exactly two lines. Same preconditions.
std::vector<VertexSet> levi_independents(const PEG& p);

namespace fixtures {
PEG fano();
PEG desargues_configuration();  // points: 2-subsets of {0..4}; lines: 3-subsets
PEG triangle();                 // K3 as a PEG
}  // namespace fixtures

}  // namespace superflats
