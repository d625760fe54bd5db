#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superflats/graph.hpp"
#include "superflats/set_lattice.hpp"

namespace superflats {

// Closure of all stars under intersection, with V on top.
SetLattice flats(const Graph& g);
// Height of the flats lattice.
int c_rank(const Graph& g);

// Descending flats V = X_0 ⊃ X_1 ⊃ ... with transversal[r] in X_r \ X_{r+1}.
struct ChainWitness {
  std::vector<VertexSet> chain;
  std::vector<int> transversal;
};

struct IndependenceResult {
  bool independent = false;
  int closure_height = 0;  // height of the intersection closure of {St(j) : j in J}
  // Witness for J in A^c in triangular order: A^c[rows[r], cols[r]] = 1 and
  // A^c[rows[r], cols[s]] = 0 for s > r.
  std::vector<int> rows;
  std::vector<int> cols;
  ChainWitness chain;
};
// Decides independence by the closure height and, on success, builds the
// witness from a strictly decreasing star ordering of J. Throws
// std::logic_error if the two disagree.
IndependenceResult is_c_independent(const Graph& g, VertexSet j);

// Independence by the witness rule alone: J is independent iff some j in J
// has J \ {j} independent and St(J) ⊊ St(J \ {j}).
bool is_c_independent_by_witness(const Graph& g, VertexSet j);
// Independence by the partial-transversal test over maximal chains of Fl G.
bool is_c_independent_by_transversal(const Graph& g, VertexSet j);

// Every c-independent set, ∅ included, sorted by (size, bits). Throws
// SizeLimitError above limits().independents_vertices.
std::vector<VertexSet> all_c_independent_sets(const Graph& g);

// c-rank by the pair recursion over (rows, columns) of A^c.
int c_rank_recursive(const Graph& g);

struct LowRankClassification {
  int rank = 0;              // exact c-rank (flats height)
  int structural_rank = 0;   // 0..4 exact, or 5 meaning "at least 5"
  // rank <= 2 with edges: the complete bipartite components (side, side).
  std::vector<std::pair<VertexSet, VertexSet>> bipartition;
  std::vector<int> path;     // rank >= 3: v1 - v2 - v3 with St(v1) != St(v3)
  std::vector<int> square;   // rank >= 4: v1 v2 v3 v4 in cyclic order
  std::vector<int> five;     // rank >= 5: v1..v5 (v1, v5 adjacent to v2, v3, v4)
};
// Structural characterisation of small ranks; certificates are verified
// before returning. Throws std::logic_error if it disagrees with c_rank.
LowRankClassification classify_low_rank(const Graph& g);

// Sober, connected, c-rank 3.
bool is_sc3(const Graph& g);
// Throws DomainError naming the failed condition.
void require_sc3(const Graph& g, const char* operation);

// 3-subsets meeting every star in at most one vertex. SC3 only.
std::vector<VertexSet> potential_lines(const Graph& g);
// All sets of size <= 2 plus 3-subsets inside no star. SC3 only.
std::vector<VertexSet> mat_g(const Graph& g);
// Exchange property of a hereditary family: |I| > |J| implies some
// i in I \ J with J + i in the family. Returns a failing (I, J) if any.
std::optional<std::pair<VertexSet, VertexSet>> exchange_violation(const std::vector<VertexSet>& family);
// Sets of size <= 2 plus 3-sets W with St(W) = ∅ that are not potential
// lines. SC3 only.
std::vector<VertexSet> sc3_independents(const Graph& g);

// v with St(St(v)) = {v}.
VertexSet closed_vertices(const Graph& g);
bool is_closed_graph(const Graph& g);

// Closure of the closed stars under union, with ∅ at the bottom.
SetLattice dual_star_lattice(const Graph& g);
int complement_c_rank_via_duality(const Graph& g);

struct CubicLatticeReport {
  int c_rank = 0;
  bool sober = false;
  bool distributive = false;
  bool modular = false;
  bool semimodular = false;
  bool geometric = false;
  bool jordan_dedekind = false;
  bool modular_law = false;       // cross-check for `modular`
  bool upper_cover_law = false;   // standard semimodularity, informative
  bool iso_k4 = false;
  bool iso_k33 = false;
  bool iso_prism = false;         // H_n
  bool iso_mobius = false;        // tilde H_n, n >= 4
  bool every_edge_in_square = false;
  bool some_star_is_atom = false;
  bool atoms_are_double_stars = false;
  ChainExtremes chains;
  // Agreement of each equivalence.
  bool distributivity_classes_agree = false;  // lattice predicates vs K4/K33
  bool jd_agrees_with_squares = false;
  bool jd_agrees_with_families = false;
  bool star_atom_agrees = false;
  bool all_agree() const {
    return distributivity_classes_agree && jd_agrees_with_squares && jd_agrees_with_families &&
           star_atom_agrees && atoms_are_double_stars && modular == modular_law;
  }
};
// Throws PreconditionError unless g is connected and cubic.
CubicLatticeReport cubic_lattice_theorems(const Graph& g);

bool every_edge_in_square(const Graph& g);

}  // namespace superflats
