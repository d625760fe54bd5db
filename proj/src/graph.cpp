#include "superflats/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "superflats/errors.hpp"
#include "superflats/limits.hpp"

namespace superflats {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(n) + " vertices; capacity is 64");
  }
  adj_.assign(n, VertexSet{});
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
  int twice = 0;
  for (auto s : adj_) twice += s.size();
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range 0.." +
                            std::to_string(n_ - 1));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw PreconditionError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::string Graph::label(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

SBMatrix adjacency_matrix(const Graph& g) {
  SBMatrix m(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    m.set(u, v, SB::one);
    m.set(v, u, SB::one);
  }
  return m;
}

SBMatrix complemented_adjacency(const Graph& g) {
  int n = g.order();
  SBMatrix m(n, n, SB::one);
  for (auto [u, v] : g.edges()) {
    m.set(u, v, SB::zero);
    m.set(v, u, SB::zero);
  }
  return m;
}

VertexSet star(const Graph& g, int v) { return g.neighbors(v); }

VertexSet star_of_set(const Graph& g, VertexSet w) {
  VertexSet out = g.vertices();
  for (int v : w) out &= g.neighbors(v);
  return out;
}

VertexSet closed_star(const Graph& g, int v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

std::vector<std::vector<int>> distances(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInfinity));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    VertexSet frontier = VertexSet::single(s), seen = frontier;
    for (int dist = 1; !frontier.empty(); ++dist) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next -= seen;
      for (int v : next) d[s][v] = dist;
      seen |= next;
      frontier = next;
    }
  }
  return d;
}

int girth(const Graph& g) {
  int n = g.order(), best = kInfinity;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first()), frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, VertexSet w) {
  if (w.empty()) return true;
  VertexSet comp = VertexSet::single(w.first()), frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v) & w;
    next -= comp;
    comp |= next;
    frontier = next;
  }
  return comp == w;
}

bool is_bipartite(const Graph& g, VertexSet* side) {
  int n = g.order();
  std::vector<int> colour(n, -1);
  VertexSet first_side;
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (colour[u] == 0) first_side.insert(u);
      for (int w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          q.push(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  if (side) *side = first_side;
  return true;
}

Metrics metrics(const Graph& g) {
  Metrics m;
  int n = g.order();
  m.components = static_cast<int>(connected_components(g).size());
  m.connected = m.components <= 1;
  m.bipartite = is_bipartite(g);
  m.girth = girth(g);
  if (n > 0) {
    m.min_degree = kInfinity;
    for (int v = 0; v < n; ++v) {
      m.min_degree = std::min(m.min_degree, g.degree(v));
      m.max_degree = std::max(m.max_degree, g.degree(v));
    }
  }
  m.cubic = n > 0 && m.min_degree == 3 && m.max_degree == 3;
  if (m.connected) {
    m.diameter = 0;
    for (const auto& row : distances(g))
      for (int d : row) m.diameter = std::max(m.diameter, d);
  }
  return m;
}

bool is_sober(const Graph& g) {
  std::vector<std::uint64_t> stars;
  for (int v = 0; v < g.order(); ++v) stars.push_back(g.neighbors(v).bits());
  std::sort(stars.begin(), stars.end());
  return std::adjacent_find(stars.begin(), stars.end()) == stars.end();
}

SoberQuotient sober_quotient(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("sober_quotient needs a connected graph");
  SoberQuotient q;
  std::map<std::uint64_t, int> rep;
  VertexSet kept;
  for (int v = 0; v < g.order(); ++v) {
    auto [it, fresh] = rep.emplace(g.neighbors(v).bits(), v);
    q.retraction.push_back(it->second);
    if (fresh) kept.insert(v);
  }
  Restriction r = restriction(g, kept);
  q.graph = std::move(r.graph);
  q.kept = std::move(r.kept);
  return q;
}

SoberTreeCheck sober_tree_check(const Graph& t) {
  if (t.order() == 0 || !is_connected(t) || t.size() != t.order() - 1) {
    throw PreconditionError("sober_tree_check needs a tree");
  }
  SoberTreeCheck out;
  out.sober = is_sober(t);
  out.no_leaves_at_distance_two = true;
  auto d = distances(t);
  for (int u = 0; u < t.order(); ++u)
    for (int v = u + 1; v < t.order(); ++v)
      if (t.degree(u) == 1 && t.degree(v) == 1 && d[u][v] == 2) {
        out.no_leaves_at_distance_two = false;
      }
  return out;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  c.set_labels(g.labels());
  return c;
}

Restriction restriction(const Graph& g, VertexSet w) {
  Restriction r;
  r.kept = w.to_vector();
  int k = static_cast<int>(r.kept.size());
  r.graph = Graph(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(r.kept[a], r.kept[b])) r.graph.add_edge(a, b);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int v : r.kept) labels.push_back(g.label(v));
    r.graph.set_labels(std::move(labels));
  }
  return r;
}

bool is_restriction(const Graph& h, const Graph& g, VertexSet w) {
  return restriction(g, w).graph == h;
}

bool is_subgraph(const Graph& h, const Graph& g, VertexSet w) {
  auto kept = w.to_vector();
  if (static_cast<int>(kept.size()) != h.order()) return false;
  for (auto [a, b] : h.edges())
    if (!g.has_edge(kept[a], kept[b])) return false;
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.order() + b.order());
  for (auto [x, y] : a.edges()) u.add_edge(x, y);
  for (auto [x, y] : b.edges()) u.add_edge(a.order() + x, a.order() + y);
  return u;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph r(g.order());
  for (auto [u, v] : g.edges()) r.add_edge(perm[u], perm[v]);
  return r;
}

int greedy_chromatic_upper_bound(const Graph& g) {
  int n = g.order();
  std::vector<int> order(n), colour(n, -1);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int used = 0;
  for (int v : order) {
    std::uint64_t taken = 0;
    for (int w : g.neighbors(v))
      if (colour[w] >= 0) taken |= std::uint64_t{1} << colour[w];
    int c = 0;
    while ((taken >> c) & 1U) ++c;
    colour[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

namespace {

bool colour_with(const Graph& g, const std::vector<int>& order, std::size_t idx, int k,
                 std::vector<int>& colour, int max_used) {
  if (idx == order.size()) return true;
  int v = order[idx];
  std::uint64_t taken = 0;
  for (int w : g.neighbors(v))
    if (colour[w] >= 0) taken |= std::uint64_t{1} << colour[w];
  // A fresh colour is interchangeable with any other fresh one.
  int top = std::min(k, max_used + 1);
  for (int c = 0; c < top; ++c) {
    if ((taken >> c) & 1U) continue;
    colour[v] = c;
    if (colour_with(g, order, idx + 1, k, colour, std::max(max_used, c + 1))) return true;
  }
  colour[v] = -1;
  return false;
}

}  // namespace

std::vector<int> exact_coloring(const Graph& g) {
  int n = g.order();
  if (n > limits().chromatic_vertices) {
    throw SizeLimitError("exact_chromatic: " + std::to_string(n) + " vertices exceeds limit " +
                         std::to_string(limits().chromatic_vertices));
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 1; k <= n; ++k) {
    std::vector<int> colour(n, -1);
    if (colour_with(g, order, 0, k, colour, 0)) return colour;
  }
  return {};
}

int exact_chromatic(const Graph& g) {
  auto colour = exact_coloring(g);
  int k = 0;
  for (int c : colour) k = std::max(k, c + 1);
  return k;
}

}  // namespace superflats
