#include "superflats/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "superflats/errors.hpp"
#include "superflats/graph_io.hpp"
#include "superflats/limits.hpp"

namespace superflats {

ColoredGraph ColoredGraph::from_graph(const Graph& g, std::vector<int> colors) {
  ColoredGraph c;
  c.adj.resize(g.order());
  for (int v = 0; v < g.order(); ++v) c.adj[v] = g.neighbors(v).to_vector();
  c.color = colors.empty() ? std::vector<int>(g.order(), 0) : std::move(colors);
  return c;
}

namespace {

// Replaces keys by their dense ranks; returns the number of distinct keys.
template <typename Key>
int rank_by(const std::vector<Key>& keys, std::vector<int>& out) {
  int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  out.assign(n, 0);
  int r = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keys[idx[i - 1]] < keys[idx[i]]) ++r;
    out[idx[i]] = r;
  }
  return r + 1;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    std::vector<int> colors;
    rank_by(g_.color, colors);
    dfs(colors);
    CanonicalLabeling out;
    out.position = best_pos_;
    out.certificate = best_cert_;
    out.automorphisms = autos_;
    return out;
  }

 private:
  int refine(std::vector<int>& colors) const {
    int cells = 0;
    for (int c : colors) cells = std::max(cells, c + 1);
    std::vector<std::vector<int>> sig(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        for (int w : g_.adj[v]) s.push_back(colors[w]);
        std::sort(s.begin() + 1, s.end());
      }
      std::vector<int> next;
      int k = rank_by(sig, next);
      colors.swap(next);
      if (k == cells) return k;
      cells = k;
    }
  }

  std::vector<int> certificate(const std::vector<int>& pos) const {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[pos[v]] = v;
    std::vector<int> cert;
    cert.reserve(n_ * 3);
    for (int p = 0; p < n_; ++p) cert.push_back(g_.color[at[p]]);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n_; ++v)
      for (int w : g_.adj[v])
        if (pos[v] < pos[w]) edges.emplace_back(pos[v], pos[w]);
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      cert.push_back(a);
      cert.push_back(b);
    }
    return cert;
  }

  // Returns the tree level to unwind to, or -1 to continue normally.
  int dfs(std::vector<int> colors) {
    int level = static_cast<int>(path_.size());
    int cells = refine(colors);
    if (cells == n_) {
      auto cert = certificate(colors);
      if (!have_best_ || cert < best_cert_) {
        have_best_ = true;
        best_cert_ = std::move(cert);
        best_pos_ = colors;
        best_path_ = path_;
        return -1;
      }
      if (cert == best_cert_) {
        // The map best leaf -> this leaf is an automorphism, so the subtree
        // rooted where the two paths diverge repeats one already searched.
        std::vector<int> at_best(n_);
        for (int v = 0; v < n_; ++v) at_best[best_pos_[v]] = v;
        std::vector<int> gamma(n_);
        for (int v = 0; v < n_; ++v) gamma[at_best[colors[v]]] = v;
        autos_.push_back(std::move(gamma));
        int diverge = 0;
        while (diverge < level && path_[diverge] == best_path_[diverge]) ++diverge;
        return diverge;
      }
      return -1;
    }

    std::vector<int> size(cells, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < cells; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;

    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (!explored.empty() && same_orbit_as_explored(v, explored)) continue;
      std::vector<int> child(n_);
      for (int u = 0; u < n_; ++u) child[u] = colors[u] * 2 + (u == v ? 0 : 1);
      rank_by(std::vector<int>(child), child);
      path_.push_back(v);
      int r = dfs(std::move(child));
      path_.pop_back();
      explored.push_back(v);
      if (r >= 0 && r < level) return r;
    }
    return -1;
  }

  bool same_orbit_as_explored(int v, const std::vector<int>& explored) const {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (int u = 0; u < n_; ++u) uf.unite(u, gamma[u]);
    }
    if (!any) return false;
    int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return uf.find(e) == root; });
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<int> path_;
  bool have_best_ = false;
  std::vector<int> best_cert_, best_pos_, best_path_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const ColoredGraph& g) {
  if (static_cast<int>(g.color.size()) != g.order()) {
    throw PreconditionError("colour vector size does not match vertex count");
  }
  return Canonizer(g).run();
}

std::optional<std::vector<int>> colored_isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.order() != b.order()) return std::nullopt;
  auto ca = canonical_labeling(a);
  auto cb = canonical_labeling(b);
  if (ca.certificate != cb.certificate) return std::nullopt;
  std::vector<int> at_b(b.order());
  for (int v = 0; v < b.order(); ++v) at_b[cb.position[v]] = v;
  std::vector<int> map(a.order());
  for (int v = 0; v < a.order(); ++v) map[v] = at_b[ca.position[v]];
  return map;
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > limits().canonical_vertices) {
    throw SizeLimitError("canonical_form: " + std::to_string(g.order()) +
                         " vertices exceeds limit " + std::to_string(limits().canonical_vertices));
  }
  auto lab = canonical_labeling(ColoredGraph::from_graph(g));
  CanonicalForm f;
  f.position = lab.position;
  f.graph = relabel(g, lab.position);
  f.key = to_graph6(f.graph);
  return f;
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).key == canonical_form(b).key;
}

std::optional<std::vector<int>> graph_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  return colored_isomorphism(ColoredGraph::from_graph(a), ColoredGraph::from_graph(b));
}

}  // namespace superflats
