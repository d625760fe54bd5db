#include "superflats/minors.hpp"

#include <algorithm>
#include <bit>

#include "superflats/enumeration.hpp"
#include "superflats/errors.hpp"
#include "superflats/flats.hpp"
#include "superflats/isomorphism.hpp"
#include "superflats/limits.hpp"

namespace superflats {

std::string MinorOp::to_string() const {
  switch (kind) {
    case Kind::delete_vertex:
      return "delete-vertex " + std::to_string(u);
    case Kind::delete_edge:
      return "delete-edge " + std::to_string(u) + "-" + std::to_string(v);
    case Kind::contract:
      return "contract " + std::to_string(u) + "-" + std::to_string(v);
  }
  return {};
}

Graph apply_minor_op(const Graph& g, const MinorOp& op) {
  auto check_vertex = [&](int x) {
    if (x < 0 || x >= g.order()) throw PreconditionError(op.to_string() + ": no vertex " + std::to_string(x));
  };
  check_vertex(op.u);
  if (op.kind == MinorOp::Kind::delete_vertex) {
    VertexSet keep = g.vertices();
    keep.erase(op.u);
    return restriction(g, keep).graph;
  }
  check_vertex(op.v);
  if (!g.has_edge(op.u, op.v)) throw PreconditionError(op.to_string() + ": no such edge");
  if (op.kind == MinorOp::Kind::delete_edge) {
    Graph h = g;
    h.remove_edge(op.u, op.v);
    return h;
  }
  int keep_v = std::min(op.u, op.v), gone = std::max(op.u, op.v);
  Graph h = g;
  for (int w : g.neighbors(gone))
    if (w != keep_v) h.add_edge(keep_v, w);
  VertexSet keep = g.vertices();
  keep.erase(gone);
  return restriction(h, keep).graph;
}

namespace {

void require_minor_size(const Graph& g, const char* op) {
  if (g.order() > limits().minor_vertices) {
    throw SizeLimitError(std::string(op) + ": " + std::to_string(g.order()) + " vertices exceeds limit " +
                         std::to_string(limits().minor_vertices));
  }
}

// Quotient adjacency as bit masks over block indices.
std::vector<std::uint64_t> quotient_masks(const Graph& g, const std::vector<VertexSet>& blocks) {
  int k = static_cast<int>(blocks.size());
  std::vector<VertexSet> reach(k);
  for (int i = 0; i < k; ++i)
    for (int v : blocks[i]) reach[i] |= g.neighbors(v);
  std::vector<std::uint64_t> q(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && reach[i].intersects(blocks[j])) q[i] |= std::uint64_t{1} << j;
  return q;
}

// Injective map of h's vertices into q's so that edges go to edges.
bool embed(const std::vector<std::uint64_t>& h, const std::vector<std::uint64_t>& q, std::vector<int>& image) {
  int k = static_cast<int>(h.size());
  image.assign(k, -1);
  std::uint64_t used = 0;
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::popcount(h[a]) > std::popcount(h[b]); });
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == k) return true;
    int x = order[pos];
    for (int y = 0; y < static_cast<int>(q.size()); ++y) {
      if ((used >> y) & 1U) continue;
      if (std::popcount(q[y]) < std::popcount(h[x])) continue;
      bool ok = true;
      for (int p = 0; p < pos && ok; ++p) {
        int z = order[p];
        if (((h[x] >> z) & 1U) && !((q[y] >> image[z]) & 1U)) ok = false;
      }
      if (!ok) continue;
      image[x] = y;
      used |= std::uint64_t{1} << y;
      if (self(self, pos + 1)) return true;
      used &= ~(std::uint64_t{1} << y);
      image[x] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> m(g.order());
  for (int v = 0; v < g.order(); ++v) m[v] = g.neighbors(v).bits();
  return m;
}

}  // namespace

std::vector<ConnectedPartition> connected_partitions(const Graph& g) {
  require_minor_size(g, "connected_partitions");
  int n = g.order();
  std::vector<ConnectedPartition> out;
  std::vector<VertexSet> blocks;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (auto b : blocks)
        if (!induces_connected(g, b)) return;
      out.push_back(blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].insert(v);
      self(self, v + 1);
      blocks[i].erase(v);
    }
    blocks.push_back(VertexSet::single(v));
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return out;
}

Graph quotient(const Graph& g, const ConnectedPartition& p) {
  auto q = quotient_masks(g, p);
  Graph h(static_cast<int>(p.size()));
  for (int i = 0; i < h.order(); ++i)
    for (int j : VertexSet(q[i]))
      if (i < j) h.add_edge(i, j);
  return h;
}

std::optional<std::vector<VertexSet>> find_minor(const Graph& h, const Graph& g) {
  require_minor_size(g, "is_minor");
  int k = h.order(), n = g.order();
  if (k > n || h.size() > g.size()) return std::nullopt;
  if (k == 0) return std::vector<VertexSet>{};
  auto hm = adjacency_masks(h);
  std::vector<VertexSet> blocks;
  std::optional<std::vector<VertexSet>> result;
  auto rec = [&](auto&& self, int v) -> bool {
    int open = k - static_cast<int>(blocks.size());
    if (open > n - v) return false;
    if (v == n) {
      for (auto b : blocks)
        if (!induces_connected(g, b)) return false;
      auto q = quotient_masks(g, blocks);
      std::vector<int> image;
      if (!embed(hm, q, image)) return false;
      std::vector<VertexSet> branch(k);
      for (int x = 0; x < k; ++x) branch[x] = blocks[image[x]];
      result = std::move(branch);
      return true;
    }
    if (self(self, v + 1)) return true;  // v deleted
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].insert(v);
      bool done = self(self, v + 1);
      blocks[i].erase(v);
      if (done) return true;
    }
    if (open > 0) {
      blocks.push_back(VertexSet::single(v));
      bool done = self(self, v + 1);
      blocks.pop_back();
      if (done) return true;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

bool is_minor(const Graph& h, const Graph& g) { return find_minor(h, g).has_value(); }

int WildcardMatrix::star_count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), Wild::star));
}

SBMatrix WildcardMatrix::resolve(std::uint64_t choice) const {
  SBMatrix m(side_, side_);
  int s = 0;
  for (int i = 0; i < side_; ++i)
    for (int j = 0; j < side_; ++j) {
      Wild w = at(i, j);
      bool one = w == Wild::one || (w == Wild::star && ((choice >> s++) & 1U));
      m.set(i, j, one ? SB::one : SB::zero);
    }
  return m;
}

std::string WildcardMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < side_; ++i) {
    for (int j = 0; j < side_; ++j) out += at(i, j) == Wild::zero ? '0' : at(i, j) == Wild::one ? '1' : '*';
    out += '\n';
  }
  return out;
}

WildcardMatrix contracted_wildcard_matrix(const Graph& g, const ConnectedPartition& p) {
  auto q = quotient_masks(g, p);
  int k = static_cast<int>(p.size());
  WildcardMatrix m(k);
  for (int i = 0; i < k; ++i)
    for (int j : VertexSet(q[i])) m.set(i, j, Wild::star);
  return m;
}

WildcardWitness wildcard_rank_witness(const WildcardMatrix& m) {
  int n = m.side();
  if (n > limits().wildcard_side) {
    throw SizeLimitError("wildcard_rank: side " + std::to_string(n) + " exceeds limit " +
                         std::to_string(limits().wildcard_side));
  }
  // ones[i]: columns where row i is definitely one; live[i]: one or star.
  std::vector<std::uint32_t> ones(n, 0), live(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j) == Wild::one) ones[i] |= 1U << j;
      if (m.at(i, j) != Wild::zero) live[i] |= 1U << j;
    }
  // Built backwards: each new (row, col) pair goes in front, so its row
  // must avoid definite ones on every column chosen so far.
  std::vector<bool> seen(std::size_t{1} << (2 * n), false);
  std::vector<std::pair<int, int>> path, best_path;
  auto rec = [&](auto&& self, std::uint32_t cols, std::uint32_t rows) -> void {
    int depth = std::popcount(cols);
    if (depth > static_cast<int>(best_path.size())) best_path = path;
    if (depth == n) return;
    std::size_t key = cols | (static_cast<std::size_t>(rows) << n);
    if (seen[key]) return;
    seen[key] = true;
    int feasible = 0;
    std::uint32_t reach = 0;
    for (int i = 0; i < n; ++i)
      if (!((rows >> i) & 1U) && !(ones[i] & cols)) {
        ++feasible;
        reach |= live[i] & ~cols;
      }
    if (depth + std::min(feasible, std::popcount(reach)) <= static_cast<int>(best_path.size())) return;
    for (int i = 0; i < n; ++i) {
      if (((rows >> i) & 1U) || (ones[i] & cols)) continue;
      for (std::uint32_t c = live[i] & ~cols; c; c &= c - 1) {
        int j = std::countr_zero(c);
        path.emplace_back(i, j);
        self(self, cols | (1U << j), rows | (1U << i));
        path.pop_back();
        if (static_cast<int>(best_path.size()) == n) return;
      }
    }
  };
  rec(rec, 0, 0);
  WildcardWitness w;
  w.rank = static_cast<int>(best_path.size());
  for (auto it = best_path.rbegin(); it != best_path.rend(); ++it) {
    w.rows.push_back(it->first);
    w.cols.push_back(it->second);
  }
  return w;
}

int wildcard_rank(const WildcardMatrix& m) { return wildcard_rank_witness(m).rank; }

CmRankResult cm_rank_certified(const Graph& g) {
  if (g.order() > limits().cm_rank_vertices) {
    throw SizeLimitError("cm_rank: " + std::to_string(g.order()) + " vertices exceeds limit " +
                         std::to_string(limits().cm_rank_vertices));
  }
  CmRankResult best;
  best.rank = -1;
  for (const auto& p : connected_partitions(g)) {
    auto m = contracted_wildcard_matrix(g, p);
    auto w = wildcard_rank_witness(m);
    if (w.rank <= best.rank) continue;
    // Realize the witness as a graph: stars on the diagonal of the
    // triangular form become deleted edges, stars above it stay edges.
    Graph minor = quotient(g, p);
    bool consistent = true;
    std::vector<std::pair<int, int>> keep;
    for (int r = 0; r < w.rank; ++r) {
      if (w.rows[r] != w.cols[r] && m.at(w.rows[r], w.cols[r]) == Wild::star) {
        minor.remove_edge(w.rows[r], w.cols[r]);
      }
      for (int s = r + 1; s < w.rank; ++s)
        if (m.at(w.rows[r], w.cols[s]) == Wild::star) keep.emplace_back(w.rows[r], w.cols[s]);
    }
    for (auto [a, b] : keep) consistent = consistent && minor.has_edge(a, b);
    if (!consistent) {
      throw std::logic_error("cm_rank: wildcard witness needs an edge both kept and deleted");
    }
    best.rank = w.rank;
    best.partition = p;
    best.minor = std::move(minor);
    if (best.rank == g.order()) break;
  }
  if (best.rank < 0) best.rank = 0;
  if (c_rank(best.minor) != best.rank) throw std::logic_error("cm_rank: certificate minor has the wrong c-rank");
  return best;
}

int cm_rank(const Graph& g) { return cm_rank_certified(g).rank; }

std::vector<Graph> forbidden_family(int m, const std::vector<Graph>* source) {
  if (m < 0) throw PreconditionError("forbidden_family: negative rank bound");
  if (m > 4) throw SizeLimitError("forbidden_family: rank bound " + std::to_string(m) + " exceeds 4");
  if (m == 0) return {Graph(1)};
  std::vector<Graph> pool = source ? canonical_classes(*source) : graphs_up_to(2 * m);
  std::vector<Graph> out;
  for (auto& g : pool)
    if (g.order() <= 2 * m && c_rank(g) == m + 1) out.push_back(std::move(g));
  return out;
}

}  // namespace superflats
