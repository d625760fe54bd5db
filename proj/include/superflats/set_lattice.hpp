#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superflats/graph.hpp"
#include "superflats/vertex_set.hpp"

namespace superflats {

// A finite lattice of subsets of a universe, ordered by inclusion.
// Elements are sorted by (size, bits), a linear extension of inclusion, so
// index 0 is the bottom and the last index is the top.
class SetLattice {
 public:
  enum class Closure { intersection, union_ };

  SetLattice() = default;
  // `family` must already be closed under the given operation and contain
  // the universe (intersection) or the empty set (union). Duplicates are
  // removed. Throws SizeLimitError above limits().flats_elements.
  SetLattice(int universe_size, std::vector<VertexSet> family, Closure closure);

  // Smallest intersection-closed family containing the generators and the
  // universe.
  static SetLattice close_under_intersection(int universe_size,
                                             const std::vector<VertexSet>& generators);
  // Smallest union-closed family containing the generators and ∅.
  static SetLattice close_under_union(int universe_size, const std::vector<VertexSet>& generators);

  int size() const { return static_cast<int>(elements_.size()); }
  int universe_size() const { return universe_size_; }
  Closure closure() const { return closure_; }
  const std::vector<VertexSet>& elements() const { return elements_; }
  VertexSet element(int i) const { return elements_[i]; }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  std::optional<int> index_of(VertexSet s) const;
  bool contains(VertexSet s) const { return index_of(s).has_value(); }

  bool leq(int a, int b) const { return elements_[a].subset_of(elements_[b]); }
  int meet(int a, int b) const;
  int join(int a, int b) const;

  // upper_covers(i): elements covering i. lower_covers(i): elements i covers.
  const std::vector<int>& upper_covers(int i) const { return up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return down_[i]; }
  bool covers(int upper, int lower) const;
  std::vector<std::pair<int, int>> cover_pairs() const;  // (upper, lower)

  // Longest chain length from the bottom to each element.
  const std::vector<int>& rank_from_bottom() const { return depth_; }
  int height() const { return size() == 0 ? 0 : depth_[top()]; }

  std::string to_dot(const std::vector<std::string>& vertex_labels = {}) const;

 private:
  void build();

  int universe_size_ = 0;
  Closure closure_ = Closure::intersection;
  std::vector<VertexSet> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> depth_;
};

int lattice_height(const SetLattice& l);

// Lattice predicates. `l` needs at most limits().flats_elements elements.
struct N5Witness {
  int bottom, low, high, side, top;  // low < high, side incomparable to both
};
std::optional<N5Witness> find_n5(const SetLattice& l, bool require_side_covers_meet = false);
bool is_modular(const SetLattice& l);
// Standard modular law a <= c => a v (b ^ c) = (a v b) ^ c; cross-check for is_modular.
bool satisfies_modular_law(const SetLattice& l);
// No N5 whose side element covers its meet with the high element.
bool is_semimodular(const SetLattice& l);
// Standard upper-cover condition: a, b cover a ^ b => a v b covers a and b.
bool satisfies_upper_cover_law(const SetLattice& l);
bool is_distributive(const SetLattice& l);
bool is_atomistic(const SetLattice& l);
bool is_geometric(const SetLattice& l);
bool is_jordan_dedekind(const SetLattice& l);

struct ChainExtremes {
  std::vector<int> longest;   // element indices from top to bottom
  std::vector<int> shortest;
};
ChainExtremes extreme_maximal_chains(const SetLattice& l);

// All maximal chains, top to bottom. Throws SizeLimitError above
// limits().maximal_chains.
std::vector<std::vector<int>> maximal_chains(const SetLattice& l);

// Components of the middle elements under p ~ q iff p ^ q != 0 or
// p v q != 1; each returned as a lattice over the universe with the
// original bottom and top added back.
std::vector<SetLattice> coproduct_decompose(const SetLattice& l);
std::vector<std::vector<int>> coproduct_components(const SetLattice& l);

// Order isomorphism, via the Hasse diagram coloured by depth. Returns the
// map from indices of a to indices of b. Throws SizeLimitError above
// limits().lattice_iso_elements.
std::optional<std::vector<int>> lattice_isomorphism(const SetLattice& a, const SetLattice& b);
bool lattice_isomorphic(const SetLattice& a, const SetLattice& b);

// Undirected cover graph on the middle elements (top and bottom removed),
// vertices in element order.
Graph restricted_hasse_graph(const SetLattice& l);

// Boolean lattice 2^k and the pentagon, as set lattices.
SetLattice boolean_lattice(int k);
SetLattice pentagon_lattice();

}  // namespace superflats
