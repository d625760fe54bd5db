#include "superflats/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "superflats/catalog.hpp"
#include "superflats/complement.hpp"
#include "superflats/enumeration.hpp"
#include "superflats/flats.hpp"
#include "superflats/geometry.hpp"
#include "superflats/graph_io.hpp"
#include "superflats/isomorphism.hpp"
#include "superflats/minors.hpp"

namespace superflats {

namespace {

// Each check returns "" on success or a description of the first failure.
using Check = std::function<std::string()>;

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

int transversal_rank(const Graph& g) {
  int best = 0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.order()); ++b) {
    VertexSet j(b);
    if (j.size() > best && is_c_independent_by_transversal(g, j)) best = j.size();
  }
  return best;
}

std::string four_way_rank(const Graph& g) {
  int a = sb_rank(complemented_adjacency(g)), b = c_rank(g), c = c_rank_recursive(g), d = transversal_rank(g);
  if (a == b && b == c && c == d) return {};
  return to_graph6(g) + ": sb " + std::to_string(a) + ", height " + std::to_string(b) + ", recursive " +
         std::to_string(c) + ", transversal " + std::to_string(d);
}

std::string independence_axioms(const Graph& g) {
  auto family = all_c_independent_sets(g);
  std::set<std::uint64_t> in;
  for (auto j : family) in.insert(j.bits());
  for (auto j : family) {
    for (int x : j)
      if (!in.count((j - VertexSet::single(x)).bits())) return to_graph6(g) + ": not hereditary at " + j.to_string();
    if (j.empty()) continue;
    for (int p = 0; p < g.order(); ++p) {
      if (!in.count(VertexSet::single(p).bits())) continue;
      bool ok = false;
      for (int x : j) ok = ok || in.count(((j - VertexSet::single(x)) | VertexSet::single(p)).bits());
      if (!ok) return to_graph6(g) + ": point replacement fails for " + j.to_string() + " and " + std::to_string(p);
    }
  }
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.order()); ++b) {
    if (is_c_independent_by_witness(g, VertexSet(b)) != (in.count(b) > 0)) {
      return to_graph6(g) + ": witness rule disagrees on " + VertexSet(b).to_string();
    }
  }
  return {};
}

std::string rank_bounds(const Graph& g) {
  int r = c_rank(g);
  auto m = metrics(g);
  if (g.order() > 0 && r > m.max_degree + 1) return to_graph6(g) + ": c-rank above maxdeg + 1";
  int comp = 0;
  for (auto c : connected_components(g)) comp = std::max(comp, c_rank(restriction(g, c).graph));
  if (comp != r) return to_graph6(g) + ": c-rank is not the max over components";
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.order()); ++b) {
    VertexSet w(b);
    int rw = c_rank(restriction(g, w).graph);
    if (rw > r) return to_graph6(g) + ": restriction to " + w.to_string() + " raises c-rank";
    bool clique = true;
    for (int v : w) clique = clique && (w - VertexSet::single(v)).subset_of(g.neighbors(v));
    if (clique && rw != w.size()) return to_graph6(g) + ": clique " + w.to_string() + " has c-rank " + std::to_string(rw);
  }
  return {};
}

std::string levi_girth(const Graph& g) {
  auto m = metrics(g);
  if (m.min_degree < 1) return {};
  int lg = girth(levi(graph_as_peg(g)));
  int expected = m.girth == kInfinity ? kInfinity : 2 * m.girth;
  if (lg != expected) return to_graph6(g) + ": Levi girth " + std::to_string(lg);
  return {};
}

std::string peg_girth(const PEG& p, const std::string& name) {
  int gth = girth(levi(p));
  if (gth != kInfinity && (gth < 6 || gth % 2 != 0)) return name + ": Levi girth " + std::to_string(gth);
  if (peg_connected(p) != is_connected(levi(p))) return name + ": connectivity mismatch";
  if (peg_is_sober(p) != is_sober(levi(p))) return name + ": soberness mismatch";
  return {};
}

std::string sweep(const std::vector<Graph>& graphs, const std::function<std::string(const Graph&)>& f) {
  for (const auto& g : graphs)
    if (auto e = f(g); !e.empty()) return e;
  return {};
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string{} : what; }

}  // namespace

std::vector<CheckResult> verify_theorems(const VerifyOptions& o) {
  std::vector<Graph> small = graphs_up_to(o.max_n);
  std::vector<Graph> connected_small;
  for (const auto& g : small)
    if (is_connected(g) && g.order() > 0) connected_small.push_back(g);
  std::mt19937_64 rng(o.seed);
  std::vector<Graph> random;
  for (int i = 0; i < o.random_samples; ++i) {
    int n = 7 + i % 3;
    random.push_back(random_graph(n, 0.3 + 0.1 * (i % 4), rng));
  }

  std::vector<std::pair<std::string, Check>> checks;
  checks.emplace_back("catalog c-ranks", [] {
    std::vector<std::pair<std::string, int>> expected{
        {"petersen", 3}, {"k:4", 4}, {"kmn:3,3", 2}, {"cycle:4", 2}, {"empty:0", 0}, {"empty:3", 1},
        {"heawood", 3},  {"cube", 4}, {"coimbra", 3}, {"sober-example", 4}, {"g5", 3}, {"g3", 3},
        {"crank3-girth3", 3}, {"crank3-girth4", 3}, {"vt16", 4}};
    for (auto& [name, r] : expected)
      if (c_rank(catalog::by_name(name)) != r) return name + " has c-rank " + std::to_string(c_rank(catalog::by_name(name)));
    return std::string{};
  });
  checks.emplace_back("four-way rank agreement", [&] { return sweep(connected_small, four_way_rank); });
  checks.emplace_back("hereditary, point replacement, witness rule", [&] { return sweep(small, independence_axioms); });
  checks.emplace_back("maxdeg, component and restriction bounds", [&] { return sweep(small, rank_bounds); });
  checks.emplace_back("Levi girth doubles graph girth", [&] { return sweep(small, levi_girth); });
  checks.emplace_back("Levi girth of point-line fixtures", [] {
    for (auto& [p, name] : std::vector<std::pair<PEG, std::string>>{
             {fixtures::fano(), "fano"}, {fixtures::desargues_configuration(), "desargues"}, {fixtures::triangle(), "triangle"}})
      if (auto e = peg_girth(p, name); !e.empty()) return e;
    return std::string{};
  });
  checks.emplace_back("random graphs on 7..9 vertices", [&] {
    return sweep(random, [](const Graph& g) {
      int a = sb_rank(complemented_adjacency(g)), b = c_rank(g), c = c_rank_recursive(g);
      if (a != b || b != c) return to_graph6(g) + ": rank disagreement";
      auto m = metrics(g);
      if (b > m.max_degree + 1) return to_graph6(g) + ": c-rank above maxdeg + 1";
      return levi_girth(g);
    });
  });
  checks.emplace_back("Heawood graph as Levi graph of the Fano plane", [] {
    Graph h = catalog::heawood();
    auto m = metrics(h);
    if (m.girth != 6 || m.diameter != 3) return std::string("Heawood girth/diameter");
    if (!potential_lines(h).empty()) return std::string("Heawood has potential lines");
    if (!graphs_isomorphic(levi(fixtures::fano()), h)) return std::string("Levi(Fano) is not Heawood");
    return expect(levi_independents(fixtures::fano()) == all_c_independent_sets(levi(fixtures::fano())),
                  "Levi-family of the Fano plane differs from the c-independent sets");
  });
  checks.emplace_back("Geo(Petersen) is the Desargues configuration", [] {
    Graph p = catalog::petersen();
    PEG gp = geo(p);
    auto sig = configuration_signature(gp);
    if (!sig || !(*sig == ConfigurationSignature{10, 3, 10, 3})) return std::string("signature is not (10_3, 10_3)");
    if (!peg_isomorphic(gp, fixtures::desargues_configuration())) return std::string("not the 2/3-subset model");
    Graph l = levi(gp);
    if (l.order() != 20 || l.size() != 30) return std::string("Levi graph size");
    return expect(graphs_isomorphic(restricted_hasse_graph(flats(p)), l), "restricted Hasse graph differs from Levi");
  });
  checks.emplace_back("flats of Levi graphs", [] {
    for (auto& [p, name] : std::vector<std::pair<PEG, std::string>>{
             {fixtures::fano(), "fano"}, {fixtures::desargues_configuration(), "desargues"}, {fixtures::triangle(), "triangle"}}) {
      auto r = flats_of_levi_structure(p);
      if (!r.all()) return name + ": Levi flats structure fails";
      if (!peg_isomorphic(dual_peg(dual_peg(p)), p)) return name + ": double dual differs";
    }
    return std::string{};
  });
  checks.emplace_back("cubic lattice theorems (connected cubic, <= 10 vertices)", [] {
    int count = 0;
    for (int n = 4; n <= 10; n += 2)
      for (const auto& g : connected_cubic_graphs(n)) {
        ++count;
        if (!cubic_lattice_theorems(g).all_agree()) return to_graph6(g) + ": lattice predicates disagree";
      }
    if (count != 27) return "found " + std::to_string(count) + " connected cubic graphs";
    auto r = cubic_lattice_theorems(catalog::vertex_transitive16());
    bool ok = !r.jordan_dedekind && r.chains.longest.size() == 5 && r.chains.shortest.size() == 4 && r.all_agree();
    return expect(ok, "16-vertex graph chains");
  });
  checks.emplace_back("complement bounds", [&] {
    if (complement_rank_both_ways(catalog::petersen()) != 5) return std::string("Petersen complement");
    return sweep(small, [](const Graph& g) {
      complement_rank_both_ways(g);
      if (!rank_sum_report(g).holds()) return to_graph6(g) + ": rank-sum or chromatic bound fails";
      return expect(classical_independents_are_c_independent_in_complement(g),
                    to_graph6(g) + ": edgeless set not c-independent in complement");
    });
  });
  checks.emplace_back("wildcard rank vs resolutions", [&] {
    std::uniform_int_distribution<int> cell(0, 2);
    for (int s = 0; s < o.wildcard_samples; ++s) {
      WildcardMatrix m(5);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m.set(i, j, static_cast<Wild>(cell(rng)));
      if (m.star_count() > 10) continue;
      int best = 0;
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << m.star_count()); ++c) best = std::max(best, sb_rank(m.resolve(c)));
      if (best != wildcard_rank(m)) return "mismatch on\n" + m.to_string();
    }
    return std::string{};
  });
  checks.emplace_back("forbidden minors characterize bounded cm-rank", [&] {
    if (cm_rank(catalog::cycle(4)) < 3) return std::string("C4 cm-rank below 3");
    for (int m = 0; m <= 2; ++m) {
      auto family = forbidden_family(m);
      for (const auto& g : small) {
        bool avoids = std::none_of(family.begin(), family.end(), [&](const Graph& f) { return is_minor(f, g); });
        if (avoids != (cm_rank(g) <= m)) return to_graph6(g) + ": equivalence fails for m = " + std::to_string(m);
      }
    }
    return std::string{};
  });

  std::vector<CheckResult> out;
  for (auto& [name, check] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace superflats
