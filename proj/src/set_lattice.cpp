#include "superflats/set_lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "superflats/errors.hpp"
#include "superflats/isomorphism.hpp"
#include "superflats/limits.hpp"

namespace superflats {

namespace {

void check_element_limit(std::size_t count) {
  if (count > limits().flats_elements) {
    throw SizeLimitError("lattice has more than " + std::to_string(limits().flats_elements) +
                         " elements");
  }
}

}  // namespace

SetLattice::SetLattice(int universe_size, std::vector<VertexSet> family, Closure closure)
    : universe_size_(universe_size), closure_(closure), elements_(std::move(family)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  check_element_limit(elements_.size());
  build();
}

SetLattice SetLattice::close_under_intersection(int universe_size,
                                                const std::vector<VertexSet>& generators) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> family;
  std::deque<VertexSet> work;
  auto add = [&](VertexSet s) {
    if (seen.insert(s).second) {
      family.push_back(s);
      check_element_limit(family.size());
      work.push_back(s);
    }
  };
  add(VertexSet::full(universe_size));
  for (auto g : generators) add(g);
  while (!work.empty()) {
    VertexSet x = work.front();
    work.pop_front();
    for (auto g : generators) add(x & g);
  }
  return SetLattice(universe_size, std::move(family), Closure::intersection);
}

SetLattice SetLattice::close_under_union(int universe_size, const std::vector<VertexSet>& generators) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> family;
  std::deque<VertexSet> work;
  auto add = [&](VertexSet s) {
    if (seen.insert(s).second) {
      family.push_back(s);
      check_element_limit(family.size());
      work.push_back(s);
    }
  };
  add(VertexSet{});
  for (auto g : generators) add(g);
  while (!work.empty()) {
    VertexSet x = work.front();
    work.pop_front();
    for (auto g : generators) add(x | g);
  }
  return SetLattice(universe_size, std::move(family), Closure::union_);
}

void SetLattice::build() {
  int n = size();
  index_.clear();
  for (int i = 0; i < n; ++i) index_.emplace(elements_[i].bits(), i);
  up_.assign(n, {});
  down_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    // Supersets of i appear later in (size, bits) order. j covers i iff no
    // cover already found for i lies strictly below j.
    for (int j = i + 1; j < n; ++j) {
      if (!elements_[i].proper_subset_of(elements_[j])) continue;
      bool blocked = false;
      for (int c : up_[i]) {
        if (elements_[c].proper_subset_of(elements_[j])) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        up_[i].push_back(j);
        down_[j].push_back(i);
      }
    }
  }
  depth_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : up_[i]) depth_[j] = std::max(depth_[j], depth_[i] + 1);
}

std::optional<int> SetLattice::index_of(VertexSet s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SetLattice::meet(int a, int b) const {
  if (closure_ == Closure::intersection) return *index_of(elements_[a] & elements_[b]);
  VertexSet both = elements_[a] & elements_[b];
  for (int k = std::min(a, b); k >= 0; --k)
    if (elements_[k].subset_of(both)) return k;
  throw PreconditionError("meet: family has no common lower bound");
}

int SetLattice::join(int a, int b) const {
  if (closure_ == Closure::union_) return *index_of(elements_[a] | elements_[b]);
  VertexSet either = elements_[a] | elements_[b];
  for (int k = std::max(a, b); k < size(); ++k)
    if (either.subset_of(elements_[k])) return k;
  throw PreconditionError("join: family has no common upper bound");
}

bool SetLattice::covers(int upper, int lower) const {
  const auto& u = up_[lower];
  return std::find(u.begin(), u.end(), upper) != u.end();
}

std::vector<std::pair<int, int>> SetLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j : up_[i]) out.emplace_back(j, i);
  std::sort(out.begin(), out.end());
  return out;
}

std::string SetLattice::to_dot(const std::vector<std::string>& vertex_labels) const {
  auto name = [&](int i) {
    std::string s;
    for (int v : elements_[i]) {
      if (!s.empty()) s += ',';
      s += vertex_labels.empty() ? std::to_string(v) : vertex_labels[v];
    }
    return s.empty() ? std::string("{}") : s;
  };
  std::string out = "digraph Lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < size(); ++i)
    out += "  " + std::to_string(i) + " [label=\"" + name(i) + "\"];\n";
  for (auto [u, l] : cover_pairs())
    out += "  " + std::to_string(l) + " -> " + std::to_string(u) + ";\n";
  out += "}\n";
  return out;
}

int lattice_height(const SetLattice& l) { return l.height(); }

namespace {

struct Tables {
  int n;
  std::vector<int> meet, join;
  explicit Tables(const SetLattice& l) : n(l.size()), meet(n * n), join(n * n) {
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        meet[a * n + b] = meet[b * n + a] = l.meet(a, b);
        join[a * n + b] = join[b * n + a] = l.join(a, b);
      }
    }
  }
  int m(int a, int b) const { return meet[a * n + b]; }
  int j(int a, int b) const { return join[a * n + b]; }
};

}  // namespace

std::optional<N5Witness> find_n5(const SetLattice& l, bool require_side_covers_meet) {
  Tables t(l);
  int n = l.size();
  for (int low = 0; low < n; ++low) {
    for (int high = low + 1; high < n; ++high) {
      if (!l.leq(low, high)) continue;
      for (int side = 0; side < n; ++side) {
        if (l.leq(side, high) || l.leq(high, side)) continue;
        int top = t.j(high, side), bottom = t.m(low, side);
        if (t.j(low, side) != top || t.m(high, side) != bottom) continue;
        if (require_side_covers_meet && !l.covers(side, bottom)) continue;
        return N5Witness{bottom, low, high, side, top};
      }
    }
  }
  return std::nullopt;
}

bool is_modular(const SetLattice& l) { return !find_n5(l).has_value(); }

bool satisfies_modular_law(const SetLattice& l) {
  Tables t(l);
  int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!l.leq(a, c)) continue;
      for (int b = 0; b < n; ++b)
        if (t.j(a, t.m(b, c)) != t.m(t.j(a, b), c)) return false;
    }
  return true;
}

bool is_semimodular(const SetLattice& l) { return !find_n5(l, true).has_value(); }

bool satisfies_upper_cover_law(const SetLattice& l) {
  Tables t(l);
  int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int m = t.m(a, b);
      if (!l.covers(a, m) || !l.covers(b, m)) continue;
      int j = t.j(a, b);
      if (!l.covers(j, a) || !l.covers(j, b)) return false;
    }
  return true;
}

bool is_distributive(const SetLattice& l) {
  Tables t(l);
  int n = l.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        if (t.m(p, t.j(q, r)) != t.j(t.m(p, q), t.m(p, r))) return false;
  return true;
}

bool is_atomistic(const SetLattice& l) {
  if (l.size() == 0) return true;
  const auto& atoms = l.upper_covers(l.bottom());
  for (int x = 0; x < l.size(); ++x) {
    int acc = l.bottom();
    for (int a : atoms)
      if (l.leq(a, x)) acc = l.join(acc, a);
    if (acc != x) return false;
  }
  return true;
}

bool is_geometric(const SetLattice& l) { return is_semimodular(l) && is_atomistic(l); }

ChainExtremes extreme_maximal_chains(const SetLattice& l) {
  int n = l.size();
  ChainExtremes out;
  if (n == 0) return out;
  // Chain lengths from each element down to the bottom.
  std::vector<int> lo(n, 0), hi(n, 0), lo_next(n, -1), hi_next(n, -1);
  for (int i = 1; i < n; ++i) {
    lo[i] = kInfinity;
    for (int d : l.lower_covers(i)) {
      if (hi[d] + 1 > hi[i]) {
        hi[i] = hi[d] + 1;
        hi_next[i] = d;
      }
      if (lo[d] + 1 < lo[i]) {
        lo[i] = lo[d] + 1;
        lo_next[i] = d;
      }
    }
  }
  for (int v = l.top(); v >= 0; v = hi_next[v]) out.longest.push_back(v);
  for (int v = l.top(); v >= 0; v = lo_next[v]) out.shortest.push_back(v);
  return out;
}

bool is_jordan_dedekind(const SetLattice& l) {
  auto c = extreme_maximal_chains(l);
  return c.longest.size() == c.shortest.size();
}

std::vector<std::vector<int>> maximal_chains(const SetLattice& l) {
  std::vector<std::vector<int>> out;
  if (l.size() == 0) return out;
  std::vector<int> chain{l.top()};
  auto rec = [&](auto&& self, int v) -> void {
    if (v == l.bottom()) {
      if (out.size() >= limits().maximal_chains) {
        throw SizeLimitError("more than " + std::to_string(limits().maximal_chains) +
                             " maximal chains");
      }
      out.push_back(chain);
      return;
    }
    for (int d : l.lower_covers(v)) {
      chain.push_back(d);
      self(self, d);
      chain.pop_back();
    }
  };
  rec(rec, l.top());
  return out;
}

std::vector<std::vector<int>> coproduct_components(const SetLattice& l) {
  int n = l.size();
  std::vector<std::vector<int>> out;
  if (n <= 2) return out;
  std::vector<int> comp(n, -1);
  for (int s = 1; s < n - 1; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      out[id].push_back(p);
      for (int q = 1; q < n - 1; ++q) {
        if (comp[q] >= 0) continue;
        if (l.meet(p, q) != l.bottom() || l.join(p, q) != l.top()) {
          comp[q] = id;
          stack.push_back(q);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<SetLattice> coproduct_decompose(const SetLattice& l) {
  std::vector<SetLattice> out;
  auto comps = coproduct_components(l);
  if (comps.size() <= 1) {
    out.push_back(l);
    return out;
  }
  for (const auto& c : comps) {
    std::vector<VertexSet> family{l.element(l.bottom()), l.element(l.top())};
    for (int i : c) family.push_back(l.element(i));
    out.emplace_back(l.universe_size(), std::move(family), l.closure());
  }
  return out;
}

namespace {

ColoredGraph hasse_colored(const SetLattice& l) {
  ColoredGraph g;
  g.adj.resize(l.size());
  for (int i = 0; i < l.size(); ++i) {
    for (int j : l.upper_covers(i)) {
      g.adj[i].push_back(j);
      g.adj[j].push_back(i);
    }
  }
  g.color = l.rank_from_bottom();
  return g;
}

}  // namespace

std::optional<std::vector<int>> lattice_isomorphism(const SetLattice& a, const SetLattice& b) {
  std::size_t cap = limits().lattice_iso_elements;
  if (static_cast<std::size_t>(a.size()) > cap || static_cast<std::size_t>(b.size()) > cap) {
    throw SizeLimitError("lattice_isomorphic: more than " + std::to_string(cap) + " elements");
  }
  if (a.size() != b.size() || a.height() != b.height()) return std::nullopt;
  if (a.cover_pairs().size() != b.cover_pairs().size()) return std::nullopt;
  // Depth colouring orients every cover edge, so coloured graph
  // isomorphism of the Hasse diagrams is order isomorphism.
  return colored_isomorphism(hasse_colored(a), hasse_colored(b));
}

bool lattice_isomorphic(const SetLattice& a, const SetLattice& b) {
  return lattice_isomorphism(a, b).has_value();
}

Graph restricted_hasse_graph(const SetLattice& l) {
  int middle = std::max(0, l.size() - 2);
  Graph g(middle);
  for (auto [u, d] : l.cover_pairs()) {
    if (u == l.top() || d == l.bottom()) continue;
    g.add_edge(d - 1, u - 1);
  }
  return g;
}

SetLattice boolean_lattice(int k) {
  std::vector<VertexSet> family;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) family.emplace_back(m);
  return SetLattice(k, std::move(family), SetLattice::Closure::intersection);
}

SetLattice pentagon_lattice() {
  return SetLattice(3, {VertexSet{}, VertexSet{0}, VertexSet{0, 1}, VertexSet{2}, VertexSet{0, 1, 2}},
                    SetLattice::Closure::intersection);
}

}  // namespace superflats
