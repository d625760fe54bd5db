#include "superflats/catalog.hpp"

#include <charconv>

#include "superflats/errors.hpp"

namespace superflats::catalog {

namespace {

Graph one_based(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  std::vector<std::string> labels;
  for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  g.set_labels(std::move(labels));
  return g;
}

Graph lettered(int n, const std::vector<std::string>& edges) {
  Graph g(n);
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.emplace_back(1, static_cast<char>('A' + v));
  for (const auto& e : edges) g.add_edge(e[0] - 'A', e[1] - 'A');
  g.set_labels(std::move(labels));
  return g;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Graph empty(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return Graph(n);
}

Graph complete(int n) {
  require(n >= 0, "K_n needs n >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int m, int n) {
  require(m >= 0 && n >= 0, "K_{m,n} needs m, n >= 0");
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "C_n needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  require(n >= 1, "P_n needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star needs leaves >= 0");
  return complete_bipartite(1, leaves);
}

Graph lcf(int n, const std::vector<int>& jumps) {
  require(n >= 3 && !jumps.empty(), "LCF needs n >= 3 and a jump list");
  Graph g = cycle(n);
  for (int v = 0; v < n; ++v) {
    int w = ((v + jumps[v % jumps.size()]) % n + n) % n;
    require(w != v, "LCF jump maps a vertex to itself");
    g.add_edge(v, w);
  }
  return g;
}

Graph petersen() {
  // Vertices are the 2-subsets of {0..4}, adjacent when disjoint.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

Graph heawood() { return lcf(14, {5, -5}); }
Graph mcgee() { return lcf(24, {12, 7, -7}); }
Graph tutte_coxeter() { return lcf(30, {-13, -9, 7, -7, 9, 13}); }
Graph desargues_graph() { return lcf(20, {5, -5, 9, -9}); }

Graph cube() {
  return lettered(8, {"AG", "AB", "AC", "BH", "BD", "CE", "CD", "DF", "EG", "EF", "FH", "HG"});
}

Graph prism(int n) {
  require(n >= 3, "H_n needs n >= 3");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

Graph mobius_ladder(int n) {
  require(n >= 3, "tilde H_n needs n >= 3");
  Graph g(2 * n);
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(n + i, n + i + 1);
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, n + i);
  g.add_edge(n - 1, n);
  g.add_edge(2 * n - 1, 0);
  return g;
}

Graph coimbra() {
  return one_based(7, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 6}, {3, 5}, {4, 7}, {5, 7}, {6, 7}});
}

Graph sober_example() {
  return one_based(6, {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 6}, {3, 5}, {3, 6}, {4, 6}, {5, 6}});
}

Graph crank3_girth3() {
  return lettered(10, {"AI", "AE", "AB", "BC", "BD", "CH", "CJ", "DG", "DF", "EI", "EF", "FG",
                       "GH", "HJ", "IJ"});
}

Graph crank3_girth4() {
  // T1..T3 = 0..2, M0..M8 = 3..11, B0 B2 B3 B5 B6 B8 = 12..17.
  Graph g(18);
  for (int t = 0; t < 3; ++t)
    for (int k = 0; k < 3; ++k) g.add_edge(t, 3 + t + 3 * k);
  for (int block = 0; block < 3; ++block)
    for (int k = 0; k < 3; ++k) {
      int m = 3 + 3 * block + k;
      g.add_edge(m, 12 + 2 * block);
      g.add_edge(m, 13 + 2 * block);
    }
  std::vector<std::string> labels{"T1", "T2", "T3"};
  for (int k = 0; k < 9; ++k) labels.push_back("M" + std::to_string(k));
  for (int k : {0, 2, 3, 5, 6, 8}) labels.push_back("B" + std::to_string(k));
  g.set_labels(std::move(labels));
  return g;
}

Graph diameter5_sc3() {
  // Path p0..p5 with a triangle hat on p0p1, p1p2, p3p4 and p4p5.
  Graph g(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
               {0, 6}, {1, 6}, {1, 7}, {2, 7}, {3, 8}, {4, 8}, {4, 9}, {5, 9}});
  g.set_labels({"p0", "p1", "p2", "p3", "p4", "p5", "a", "b", "c", "d"});
  return g;
}

Graph diameter3_with_lines() {
  // Generalised Petersen graph GP(7, 2): outer 7-cycle, spokes, inner
  // star polygon {7/2}.
  Graph g(14);
  for (int i = 0; i < 7; ++i) {
    g.add_edge(i, (i + 1) % 7);
    g.add_edge(i, 7 + i);
    g.add_edge(7 + i, 7 + (i + 2) % 7);
  }
  return g;
}

Graph vertex_transitive16() {
  return one_based(16, {{1, 2},   {1, 3},   {1, 7},   {2, 6},   {2, 8},   {3, 4},
                        {3, 11},  {4, 5},   {4, 7},   {5, 6},   {5, 8},   {6, 14},
                        {7, 9},   {8, 10},  {9, 15},  {9, 12},  {10, 16}, {10, 13},
                        {11, 12}, {11, 15}, {12, 13}, {13, 14}, {14, 16}, {15, 16}});
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {"empty", "n", "n isolated vertices"},
      {"k", "n", "complete graph K_n"},
      {"kmn", "m,n", "complete bipartite graph K_{m,n}"},
      {"cycle", "n", "cycle C_n"},
      {"path", "n", "path on n vertices"},
      {"star", "n", "star K_{1,n}"},
      {"petersen", "", "Petersen graph"},
      {"heawood", "", "Heawood graph, LCF [5,-5]^7"},
      {"mcgee", "", "McGee graph, LCF [12,7,-7]^8"},
      {"tutte-coxeter", "", "Tutte-Coxeter graph, LCF [-13,-9,7,-7,9,13]^5"},
      {"desargues", "", "Desargues graph, LCF [5,-5,9,-9]^5"},
      {"cube", "", "3-cube, cubic with c-rank 4 and girth 4"},
      {"hn", "n", "cylindrical strip H_n (prism), n >= 3"},
      {"tilde-hn", "n", "Moebius strip (ladder), n >= 4"},
      {"coimbra", "", "7-vertex sober connected graph of c-rank 3"},
      {"sober-example", "", "6-vertex graph whose vertex 1 retracts away"},
      {"crank3-girth3", "", "10-vertex cubic graph, c-rank 3, girth 3"},
      {"crank3-girth4", "", "18-vertex cubic graph, c-rank 3, girth 4"},
      {"g5", "", "10-vertex SC3 graph, diameter 5, no potential lines"},
      {"g3", "", "GP(7,2): cubic SC3, diameter 3, with potential lines"},
      {"vt16", "", "16-vertex vertex-transitive cubic graph failing Jordan-Dedekind"},
  };
  return list;
}

namespace {

std::vector<int> parse_ints(std::string_view s, const std::string& name) {
  std::vector<int> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto item = s.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw PreconditionError("catalog '" + name + "': bad parameter '" + std::string(item) + "'");
    }
    out.push_back(v);
    s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
  }
  return out;
}

}  // namespace

Graph by_name(std::string_view spec) {
  auto colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  auto params = colon == std::string_view::npos ? std::vector<int>{}
                                                : parse_ints(spec.substr(colon + 1), name);
  auto want = [&](std::size_t k) {
    if (params.size() != k) {
      throw PreconditionError("catalog '" + name + "' takes " + std::to_string(k) +
                              " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (name == "empty") { want(1); return empty(params[0]); }
  if (name == "k") { want(1); return complete(params[0]); }
  if (name == "kmn") { want(2); return complete_bipartite(params[0], params[1]); }
  if (name == "cycle") { want(1); return cycle(params[0]); }
  if (name == "path") { want(1); return path(params[0]); }
  if (name == "star") { want(1); return star_graph(params[0]); }
  if (name == "hn") { want(1); return prism(params[0]); }
  if (name == "tilde-hn") {
    want(1);
    require(params[0] >= 4, "tilde-hn needs n >= 4");
    return mobius_ladder(params[0]);
  }
  want(0);
  if (name == "petersen") return petersen();
  if (name == "heawood") return heawood();
  if (name == "mcgee") return mcgee();
  if (name == "tutte-coxeter") return tutte_coxeter();
  if (name == "desargues") return desargues_graph();
  if (name == "cube") return cube();
  if (name == "coimbra") return coimbra();
  if (name == "sober-example") return sober_example();
  if (name == "crank3-girth3") return crank3_girth3();
  if (name == "crank3-girth4") return crank3_girth4();
  if (name == "g5") return diameter5_sc3();
  if (name == "g3") return diameter3_with_lines();
  if (name == "vt16") return vertex_transitive16();
  throw PreconditionError("unknown catalog graph '" + name + "'");
}

}  // namespace superflats::catalog
