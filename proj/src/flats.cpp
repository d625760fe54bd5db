#include "superflats/flats.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "superflats/catalog.hpp"
#include "superflats/errors.hpp"
#include "superflats/isomorphism.hpp"
#include "superflats/limits.hpp"

namespace superflats {

namespace {

std::vector<VertexSet> stars_of(const Graph& g, VertexSet w) {
  std::vector<VertexSet> out;
  for (int v : w) out.push_back(g.neighbors(v));
  return out;
}

}  // namespace

SetLattice flats(const Graph& g) {
  return SetLattice::close_under_intersection(g.order(), stars_of(g, g.vertices()));
}

int c_rank(const Graph& g) { return flats(g).height(); }

namespace {

// Orders J as j_1..j_k with St(j_r..j_k) ⊊ St(j_{r+1}..j_k), searching
// suffix sets from ∅ upwards. Returns the order or empty if none exists.
std::vector<int> strict_star_order(const Graph& g, VertexSet j) {
  std::unordered_set<VertexSet, VertexSetHash> dead;
  std::vector<int> added;
  auto rec = [&](auto&& self, VertexSet t) -> bool {
    if (t == j) return true;
    if (dead.count(t)) return false;
    VertexSet st = star_of_set(g, t);
    for (int v : j - t) {
      if ((st & g.neighbors(v)) == st) continue;
      added.push_back(v);
      if (self(self, t | VertexSet::single(v))) return true;
      added.pop_back();
    }
    dead.insert(t);
    return false;
  };
  if (!rec(rec, VertexSet{})) return {};
  std::reverse(added.begin(), added.end());
  return added;
}

}  // namespace

IndependenceResult is_c_independent(const Graph& g, VertexSet j) {
  IndependenceResult out;
  out.closure_height =
      SetLattice::close_under_intersection(g.order(), stars_of(g, j)).height();
  out.independent = out.closure_height == j.size();
  std::vector<int> order = strict_star_order(g, j);
  bool ordered = j.empty() || !order.empty();
  if (ordered != out.independent) {
    throw std::logic_error("independence criteria disagree on " + j.to_string());
  }
  if (!out.independent) return out;
  int k = static_cast<int>(order.size());
  out.cols = order;
  out.rows.resize(k);
  VertexSet later = g.vertices();  // St(j_{r+1}, ..., j_k)
  for (int r = k - 1; r >= 0; --r) {
    if (r == k - 1) {
      out.rows[r] = order[r];
    } else {
      out.rows[r] = (later - g.neighbors(order[r])).first();
    }
    later &= g.neighbors(order[r]);
  }
  VertexSet x = g.vertices();
  out.chain.chain.push_back(x);
  for (int r = 0; r < k; ++r) {
    x &= g.neighbors(out.rows[r]);
    out.chain.chain.push_back(x);
    out.chain.transversal.push_back(out.cols[r]);
  }
  return out;
}

bool is_c_independent_by_witness(const Graph& g, VertexSet j) {
  std::unordered_map<VertexSet, bool, VertexSetHash> memo;
  auto rec = [&](auto&& self, VertexSet t) -> bool {
    if (t.empty()) return true;
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    VertexSet st = star_of_set(g, t);
    bool ok = false;
    for (int v : t) {
      VertexSet rest = t - VertexSet::single(v);
      if (star_of_set(g, rest) != st && self(self, rest)) {
        ok = true;
        break;
      }
    }
    memo.emplace(t, ok);
    return ok;
  };
  return rec(rec, j);
}

bool is_c_independent_by_transversal(const Graph& g, VertexSet j) {
  SetLattice fl = flats(g);
  for (const auto& chain : maximal_chains(fl)) {
    if (j.intersects(fl.element(chain.back()))) continue;
    bool ok = true;
    for (std::size_t r = 1; r < chain.size() && ok; ++r) {
      VertexSet diff = fl.element(chain[r - 1]) - fl.element(chain[r]);
      ok = (diff & j).size() <= 1;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<VertexSet> all_c_independent_sets(const Graph& g) {
  if (g.order() > limits().independents_vertices) {
    throw SizeLimitError("independent-set enumeration: " + std::to_string(g.order()) +
                         " vertices exceeds limit " +
                         std::to_string(limits().independents_vertices));
  }
  std::unordered_map<VertexSet, VertexSet, VertexSetHash> star_of;  // independent set -> St
  std::vector<VertexSet> out{VertexSet{}};
  star_of.emplace(VertexSet{}, g.vertices());
  std::vector<VertexSet> level{VertexSet{}};
  while (!level.empty()) {
    std::vector<VertexSet> next;
    for (VertexSet s : level) {
      int start = s.empty() ? 0 : 64 - std::countl_zero(s.bits());
      for (int v = start; v < g.order(); ++v) {
        VertexSet t = s | VertexSet::single(v);
        VertexSet st = star_of.at(s) & g.neighbors(v);
        bool ok = false;
        for (int x : t) {
          auto it = star_of.find(t - VertexSet::single(x));
          if (it != star_of.end() && it->second != st) {
            ok = true;
            break;
          }
        }
        if (ok) {
          star_of.emplace(t, st);
          next.push_back(t);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct PairKeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
    return VertexSetHash{}(VertexSet(k.first)) * 31 + VertexSetHash{}(VertexSet(k.second));
  }
};

}  // namespace

int c_rank_recursive(const Graph& g) {
  // R(U, J) = rank of A^c[U, J]. R >= 1 iff some i in U has a non-neighbour
  // in J. R >= m >= 2 iff there are distinct i1, i2 in U with J \ St(i1)
  // and (J ∩ St(i1)) \ St(i2) nonempty and
  // R(U - {i1, i2}, J ∩ St(i1) ∩ St(i2)) >= m - 2.
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, PairKeyHash> memo;
  auto rank = [&](auto&& self, VertexSet u, VertexSet j) -> int {
    if (u.empty() || j.empty()) return 0;
    auto key = std::make_pair(u.bits(), j.bits());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = 0;
    for (int i : u)
      if (!(j - g.neighbors(i)).empty()) best = 1;
    for (int i1 : u) {
      if ((j - g.neighbors(i1)).empty()) continue;
      VertexSet a = j & g.neighbors(i1);
      for (int i2 : u) {
        if (i2 == i1 || (a - g.neighbors(i2)).empty()) continue;
        VertexSet rest = u - VertexSet::single(i1) - VertexSet::single(i2);
        best = std::max(best, 2 + self(self, rest, a & g.neighbors(i2)));
      }
    }
    memo.emplace(key, best);
    return best;
  };
  if (g.order() == 0) return 0;
  int best = 1;
  for (int v = 0; v < g.order(); ++v)
    for (int w = 0; w < g.order(); ++w) {
      if (v == w || g.neighbors(v) == g.neighbors(w)) continue;
      VertexSet rest = g.vertices() - VertexSet::single(v) - VertexSet::single(w);
      best = std::max(best, 2 + rank(rank, rest, g.neighbors(v) & g.neighbors(w)));
    }
  return best;
}

namespace {

bool find_bipartite_components(const Graph& g,
                               std::vector<std::pair<VertexSet, VertexSet>>& parts) {
  for (VertexSet comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    Restriction r = restriction(g, comp);
    VertexSet side;
    if (!is_bipartite(r.graph, &side)) return false;
    VertexSet a, b;
    for (int i = 0; i < r.graph.order(); ++i) (side.contains(i) ? a : b).insert(r.kept[i]);
    if (r.graph.size() != a.size() * b.size()) return false;
    parts.emplace_back(a, b);
  }
  return true;
}

bool find_path3(const Graph& g, std::vector<int>& out) {
  for (int v2 = 0; v2 < g.order(); ++v2)
    for (int v1 : g.neighbors(v2))
      for (int v3 : g.neighbors(v2))
        if (v1 < v3 && g.neighbors(v1) != g.neighbors(v3)) {
          out = {v1, v2, v3};
          return true;
        }
  return false;
}

bool find_square(const Graph& g, std::vector<int>& out) {
  for (int v1 = 0; v1 < g.order(); ++v1)
    for (int v2 : g.neighbors(v1))
      for (int v4 : g.neighbors(v1)) {
        if (v4 == v2 || g.neighbors(v2) == g.neighbors(v4)) continue;
        for (int v3 : g.neighbors(v2) & g.neighbors(v4)) {
          if (v3 == v1 || g.neighbors(v1) == g.neighbors(v3)) continue;
          out = {v1, v2, v3, v4};
          return true;
        }
      }
  return false;
}

bool find_five(const Graph& g, std::vector<int>& out) {
  for (int v1 = 0; v1 < g.order(); ++v1)
    for (int v5 = 0; v5 < g.order(); ++v5) {
      if (v5 == v1 || g.neighbors(v1) == g.neighbors(v5)) continue;
      VertexSet common = g.neighbors(v1) & g.neighbors(v5);
      for (int v2 : common)
        for (int v3 : common) {
          if (v3 == v2 || g.neighbors(v2) == g.neighbors(v3)) continue;
          VertexSet st23 = g.neighbors(v2) & g.neighbors(v3);
          for (int v4 : common) {
            if (v4 == v2 || v4 == v3 || st23.subset_of(g.neighbors(v4))) continue;
            out = {v1, v2, v3, v4, v5};
            return true;
          }
        }
    }
  return false;
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("classify_low_rank: ") + what);
}

}  // namespace

LowRankClassification classify_low_rank(const Graph& g) {
  LowRankClassification c;
  c.rank = c_rank(g);
  if (g.order() == 0) {
    c.structural_rank = 0;
  } else if (g.size() == 0) {
    c.structural_rank = 1;
  } else if (find_bipartite_components(g, c.bipartition)) {
    c.structural_rank = 2;
  } else {
    c.bipartition.clear();
    check(find_path3(g, c.path), "no separating 3-path in a non-bipartite-union graph");
    c.structural_rank = 3;
    if (find_square(g, c.square)) {
      c.structural_rank = 4;
      if (find_five(g, c.five)) c.structural_rank = 5;
    }
  }
  for (auto [a, b] : c.bipartition)
    for (int x : a)
      for (int y : b) check(g.has_edge(x, y), "bipartition certificate misses an edge");
  if (!c.path.empty()) {
    check(g.has_edge(c.path[0], c.path[1]) && g.has_edge(c.path[1], c.path[2]), "bad path");
    check(g.neighbors(c.path[0]) != g.neighbors(c.path[2]), "path ends share a star");
  }
  if (!c.square.empty()) {
    for (int i = 0; i < 4; ++i) check(g.has_edge(c.square[i], c.square[(i + 1) % 4]), "bad square");
  }
  if (!c.five.empty()) {
    for (int m = 1; m <= 3; ++m) {
      check(g.has_edge(c.five[0], c.five[m]) && g.has_edge(c.five[4], c.five[m]),
            "bad five-vertex configuration");
    }
  }
  bool agree = c.structural_rank < 5 ? c.rank == c.structural_rank : c.rank >= 5;
  check(agree, "structural rank disagrees with the flats height");
  return c;
}

bool is_sc3(const Graph& g) { return is_sober(g) && is_connected(g) && c_rank(g) == 3; }

void require_sc3(const Graph& g, const char* operation) {
  std::string op(operation);
  if (!is_sober(g)) throw DomainError(op + " needs a sober graph (two vertices share a star)");
  if (!is_connected(g)) throw DomainError(op + " needs a connected graph");
  int r = c_rank(g);
  if (r != 3) throw DomainError(op + " needs c-rank 3, got " + std::to_string(r));
}

std::vector<VertexSet> potential_lines(const Graph& g) {
  require_sc3(g, "potential_lines");
  std::vector<VertexSet> out;
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        VertexSet p{a, b, c};
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = (p & g.neighbors(v)).size() <= 1;
        if (ok) out.push_back(p);
      }
  return out;
}

namespace {

std::vector<VertexSet> small_subsets(int n) {
  std::vector<VertexSet> out{VertexSet{}};
  for (int a = 0; a < n; ++a) {
    out.push_back(VertexSet{a});
    for (int b = a + 1; b < n; ++b) out.push_back(VertexSet{a, b});
  }
  return out;
}

}  // namespace

std::vector<VertexSet> mat_g(const Graph& g) {
  require_sc3(g, "mat_g");
  auto out = small_subsets(g.order());
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        VertexSet w{a, b, c};
        if (star_of_set(g, w).empty()) out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> exchange_violation(
    const std::vector<VertexSet>& family) {
  std::unordered_set<VertexSet, VertexSetHash> members(family.begin(), family.end());
  for (VertexSet i : family)
    for (VertexSet j : family) {
      if (i.size() <= j.size()) continue;
      bool ok = false;
      for (int x : i - j)
        if (members.count(j | VertexSet::single(x))) {
          ok = true;
          break;
        }
      if (!ok) return std::make_pair(i, j);
    }
  return std::nullopt;
}

std::vector<VertexSet> sc3_independents(const Graph& g) {
  auto lines = potential_lines(g);
  std::unordered_set<VertexSet, VertexSetHash> line_set(lines.begin(), lines.end());
  auto out = small_subsets(g.order());
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        VertexSet w{a, b, c};
        if (star_of_set(g, w).empty() && !line_set.count(w)) out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet closed_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (star_of_set(g, g.neighbors(v)) == VertexSet::single(v)) out.insert(v);
  return out;
}

bool is_closed_graph(const Graph& g) { return closed_vertices(g) == g.vertices(); }

SetLattice dual_star_lattice(const Graph& g) {
  std::vector<VertexSet> closed;
  for (int v = 0; v < g.order(); ++v) closed.push_back(closed_star(g, v));
  return SetLattice::close_under_union(g.order(), closed);
}

int complement_c_rank_via_duality(const Graph& g) { return dual_star_lattice(g).height(); }

bool every_edge_in_square(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    VertexSet far = g.neighbors(v) - VertexSet::single(u);
    bool found = false;
    for (int x : g.neighbors(u) - VertexSet::single(v)) {
      if (g.neighbors(x).intersects(far)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

CubicLatticeReport cubic_lattice_theorems(const Graph& g) {
  Metrics m = metrics(g);
  if (!m.connected || !m.cubic) {
    throw PreconditionError("cubic_lattice_theorems needs a connected cubic graph");
  }
  CubicLatticeReport r;
  SetLattice fl = flats(g);
  r.c_rank = fl.height();
  r.sober = is_sober(g);
  r.distributive = is_distributive(fl);
  r.modular = is_modular(fl);
  r.modular_law = satisfies_modular_law(fl);
  r.semimodular = is_semimodular(fl);
  r.upper_cover_law = satisfies_upper_cover_law(fl);
  r.geometric = is_geometric(fl);
  r.chains = extreme_maximal_chains(fl);
  r.jordan_dedekind = r.chains.longest.size() == r.chains.shortest.size();

  int n = g.order();
  r.iso_k4 = n == 4 && graphs_isomorphic(g, catalog::complete(4));
  r.iso_k33 = n == 6 && graphs_isomorphic(g, catalog::complete_bipartite(3, 3));
  r.iso_prism = n >= 6 && graphs_isomorphic(g, catalog::prism(n / 2));
  r.iso_mobius = n >= 8 && graphs_isomorphic(g, catalog::mobius_ladder(n / 2));
  r.every_edge_in_square = every_edge_in_square(g);

  const auto& atoms = fl.upper_covers(fl.bottom());
  for (int v = 0; v < n; ++v) {
    int idx = *fl.index_of(g.neighbors(v));
    if (std::find(atoms.begin(), atoms.end(), idx) != atoms.end()) r.some_star_is_atom = true;
  }
  std::vector<VertexSet> atom_sets, double_stars;
  for (int a : atoms) atom_sets.push_back(fl.element(a));
  for (int v = 0; v < n; ++v) double_stars.push_back(star_of_set(g, g.neighbors(v)));
  std::sort(atom_sets.begin(), atom_sets.end());
  std::sort(double_stars.begin(), double_stars.end());
  double_stars.erase(std::unique(double_stars.begin(), double_stars.end()), double_stars.end());
  r.atoms_are_double_stars = atom_sets == double_stars;

  bool small = r.iso_k4 || r.iso_k33;
  r.distributivity_classes_agree = r.distributive == small && r.modular == small &&
                                   r.semimodular == small && r.geometric == small;
  r.jd_agrees_with_squares =
      r.jordan_dedekind == (r.c_rank <= 3 || (r.sober && r.every_edge_in_square));
  r.jd_agrees_with_families =
      r.jordan_dedekind == (r.c_rank <= 3 || r.iso_k4 || r.iso_prism || r.iso_mobius);
  r.star_atom_agrees = r.some_star_is_atom == r.iso_k33;
  return r;
}

}  // namespace superflats
