#include "superflats/enumeration.hpp"

#include <algorithm>
#include <map>

#include "superflats/errors.hpp"
#include "superflats/graph_io.hpp"
#include "superflats/isomorphism.hpp"

namespace superflats {

namespace {

std::vector<Graph> sorted_values(std::map<std::string, Graph>& by_key) {
  std::vector<Graph> out;
  out.reserve(by_key.size());
  for (auto& [key, g] : by_key) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> canonical_classes(const std::vector<Graph>& graphs) {
  std::map<std::string, Graph> by_key;
  for (const auto& g : graphs) {
    auto cf = canonical_form(g);
    by_key.emplace(cf.key, std::move(cf.graph));
  }
  return sorted_values(by_key);
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw PreconditionError("all_graphs: negative order");
  if (n > 10) throw SizeLimitError("all_graphs: order " + std::to_string(n) + " exceeds 10");
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& g : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        Graph h(k);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (int u : VertexSet(nb)) h.add_edge(u, k - 1);
        auto cf = canonical_form(h);
        next.emplace(cf.key, std::move(cf.graph));
      }
    }
    level = sorted_values(next);
  }
  return level;
}

std::vector<Graph> graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    auto level = all_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> connected_cubic_graphs(int n) {
  if (n < 0 || n % 2 != 0) return {};
  if (n > 20) throw SizeLimitError("connected_cubic_graphs: order " + std::to_string(n) + " exceeds 20");
  std::map<std::string, Graph> found;
  std::vector<std::uint64_t> adj(n, 0);
  std::vector<int> deg(n, 0);
  int touched = 0;  // vertices 0..touched-1 have been used

  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < n && deg[v] == 3) ++v;
    if (v == n) {
      Graph g(n);
      for (int a = 0; a < n; ++a)
        for (int b : VertexSet(adj[a]))
          if (a < b) g.add_edge(a, b);
      if (!is_connected(g)) return;
      auto cf = canonical_form(g);
      found.emplace(cf.key, std::move(cf.graph));
      return;
    }
    // Neighbours of v are added in increasing order, beyond the current
    // largest one, and only the first untouched vertex is ever tried.
    int start = adj[v] ? 64 - std::countl_zero(adj[v]) : 0;
    for (int w = std::max(start, v + 1); w < n && w <= touched; ++w) {
      if (deg[w] == 3 || ((adj[v] >> w) & 1U)) continue;
      adj[v] |= std::uint64_t{1} << w;
      adj[w] |= std::uint64_t{1} << v;
      ++deg[v];
      ++deg[w];
      int saved = touched;
      touched = std::max(touched, w + 1);
      self(self);
      touched = saved;
      --deg[v];
      --deg[w];
      adj[v] &= ~(std::uint64_t{1} << w);
      adj[w] &= ~(std::uint64_t{1} << v);
    }
  };
  if (n == 0) return {Graph(0)};
  touched = 1;
  rec(rec);
  return sorted_values(found);
}

std::string labelled_graph6_stream(int n) {
  if (n < 0 || n > 6) throw SizeLimitError("labelled_graph6_stream: order must be in 0..6");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  std::string out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    out += to_graph6(g);
    out += '\n';
  }
  return out;
}

}  // namespace superflats
