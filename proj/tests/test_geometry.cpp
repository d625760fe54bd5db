#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "superflats/catalog.hpp"
#include "superflats/enumeration.hpp"
#include "superflats/errors.hpp"
#include "superflats/flats.hpp"
#include "superflats/geometry.hpp"
#include "superflats/isomorphism.hpp"

using namespace superflats;

namespace {

int axiom_of(int points, std::vector<VertexSet> lines) {
  try {
    validate_peg(points, std::move(lines));
  } catch (const AxiomError& e) {
    return e.axiom();
  }
  return 0;
}

std::vector<std::pair<std::string, PEG>> small_pegs() {
  return {{"fano", fixtures::fano()},
          {"desargues", fixtures::desargues_configuration()},
          {"triangle", fixtures::triangle()},
          {"c4", graph_as_peg(catalog::cycle(4))},
          {"c5", graph_as_peg(catalog::cycle(5))},
          {"k4", graph_as_peg(catalog::complete(4))},
          {"k4-dual", dual_peg(graph_as_peg(catalog::complete(4)))},
          {"k33", graph_as_peg(catalog::complete_bipartite(3, 3))},
          {"petersen-geo", geo(catalog::petersen())},
          {"coimbra-geo", geo(catalog::coimbra())}};
}

}  // namespace

TEST_CASE("axioms") {
  CHECK(axiom_of(10, fixtures::desargues_configuration().lines()) == 0);
  CHECK(axiom_of(4, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}}) == 2);
  CHECK(axiom_of(3, {VertexSet{0, 1, 2}, VertexSet{1}}) == 3);
  CHECK(axiom_of(4, {VertexSet{0, 1, 2}}) == 1);
  CHECK(axiom_of(3, {VertexSet{0, 1, 5}}) == 1);
  CHECK_THROWS_AS(graph_as_peg(catalog::empty(2)), AxiomError);
}

TEST_CASE("text format") {
  for (auto& [name, p] : small_pegs()) {
    PEG q = parse_peg(to_peg_text(p));
    CHECK(q.points() == p.points());
    CHECK(q.lines() == p.lines());
  }
  CHECK(parse_peg("# fano-like\npoints 3\n0 1\n1 2 # comment\n0 2\n").line_count() == 3);
  CHECK_THROWS_AS(parse_peg("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_peg("points 3\n0 7\n"), ParseError);
  CHECK_THROWS_AS(parse_peg("points 3\n0 x\n"), ParseError);
}

TEST_CASE("configuration signatures") {
  CHECK(configuration_signature(fixtures::desargues_configuration()) == ConfigurationSignature{10, 3, 10, 3});
  CHECK(configuration_signature(fixtures::fano()) == ConfigurationSignature{7, 3, 7, 3});
  CHECK_FALSE(configuration_signature(PEG(4, {VertexSet{0, 1, 2}, VertexSet{2, 3}})).has_value());
  for (const char* name : {"petersen", "heawood", "g3", "mcgee"}) {
    Graph g = catalog::by_name(name);
    CHECK(configuration_signature(geo(g)) == ConfigurationSignature{g.order(), 3, g.order(), 3});
  }
}

TEST_CASE("Levi graphs") {
  CHECK(graphs_isomorphic(levi(fixtures::triangle()), catalog::cycle(6)));
  Graph d = levi(fixtures::desargues_configuration());
  CHECK(d.order() == 20);
  CHECK(d.size() == 30);
  CHECK(graphs_isomorphic(d, catalog::desargues_graph()));
  CHECK(graphs_isomorphic(levi(fixtures::fano()), catalog::heawood()));
  for (auto& [name, p] : small_pegs()) {
    Graph l = levi(p);
    CHECK(is_bipartite(l));
    CHECK(l.order() == p.points() + p.line_count());
    int incidences = 0;
    for (int x = 0; x < p.points(); ++x) {
      CHECK(l.degree(x) == p.pencil(x).size());
      incidences += p.pencil(x).size();
    }
    for (int i = 0; i < p.line_count(); ++i) {
      CHECK(l.degree(p.points() + i) == p.line(i).size());
      incidences += p.line(i).size();
    }
    CHECK(l.size() * 2 == incidences);
    int gth = girth(l);
    CHECK((gth == kInfinity || (gth >= 6 && gth % 2 == 0)));
    CHECK(peg_connected(p) == is_connected(l));
    CHECK(peg_is_sober(p) == is_sober(l));
    CHECK(p.min_degree() == metrics(l).min_degree);
    if (peg_connected(p) && peg_is_sober(p)) CHECK(is_sc3(l));
  }
}

TEST_CASE("Levi graph of a graph is its subdivision") {
  Graph g = catalog::petersen();
  Graph l = levi(graph_as_peg(g));
  CHECK(l.order() == g.order() + g.size());
  CHECK(l.size() == 2 * g.size());
  CHECK(girth(l) == 2 * girth(g));
}

TEST_CASE("connectivity and soberness") {
  PEG two = PEG(6, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}, VertexSet{3, 4}, VertexSet{4, 5}, VertexSet{3, 5}});
  CHECK_FALSE(peg_connected(two));
  CHECK(peg_connected(fixtures::desargues_configuration()));
  CHECK_FALSE(peg_is_sober(PEG(3, {VertexSet{0, 1, 2}})));
  CHECK(peg_is_sober(fixtures::fano()));
  int tested = 0;
  for (int n = 4; n <= 7; ++n)
    for (const auto& g : all_graphs(n)) {
      if (!is_sc3(g) || metrics(g).min_degree < 2) continue;
      ++tested;
      CHECK(peg_connected(geo(g)) == !is_bipartite(g));
    }
  CHECK(tested > 5);
  CHECK_THROWS_AS(geo(catalog::complete(4)), DomainError);
}

TEST_CASE("duality") {
  CHECK(peg_isomorphic(dual_peg(fixtures::desargues_configuration()), fixtures::desargues_configuration()));
  for (int n = 3; n <= 7; ++n) {
    PEG c = graph_as_peg(catalog::cycle(n));
    CHECK(peg_isomorphic(dual_peg(c), c));
  }
  for (auto& [name, p] : small_pegs()) {
    if (p.min_degree() < 2) continue;
    CHECK(peg_isomorphic(dual_peg(dual_peg(p)), p));
    CHECK(graphs_isomorphic(levi(dual_peg(p)), levi(p)));
  }
  PEG k4 = graph_as_peg(catalog::complete(4));
  CHECK_FALSE(peg_isomorphic(dual_peg(k4), k4));
  CHECK_THROWS_AS(dual_peg(PEG(3, {VertexSet{0, 1}, VertexSet{1, 2}})), PreconditionError);
}

TEST_CASE("Lat of a geometry") {
  auto lat = lat_peg(fixtures::desargues_configuration());
  CHECK(lat.size() == 22);
  CHECK(lat.height() == 3);
  auto chain = lat_peg(PEG(2, {VertexSet{0, 1}}));
  CHECK(chain.size() == 1);  // the line is P itself
  auto pegs = small_pegs();
  for (auto& [a, p] : pegs)
    for (auto& [b, q] : pegs) {
      if (p.min_degree() < 2 || q.min_degree() < 2) continue;
      CHECK(lattice_isomorphic(lat_peg(p), lat_peg(q)) == peg_isomorphic(p, q));
    }
}

TEST_CASE("three-way isomorphism equivalence") {
  auto pegs = small_pegs();
  for (auto& [a, p] : pegs)
    for (auto& [b, q] : pegs) {
      if (!peg_connected(p) || !peg_connected(q) || p.min_degree() < 2 || q.min_degree() < 2) continue;
      bool geom = peg_isomorphic(p, q) || peg_isomorphic(dual_peg(p), q);
      bool lev = graphs_isomorphic(levi(p), levi(q));
      bool fl = lattice_isomorphic(flats(levi(p)), flats(levi(q)));
      CHECK(geom == lev);
      CHECK(lev == fl);
    }
}

TEST_CASE("flats of Levi graphs") {
  for (auto& [name, p] : small_pegs()) {
    if (!peg_connected(p) || !peg_is_sober(p) || p.min_degree() < 2) {
      CHECK_THROWS_AS(flats_of_levi_structure(p), DomainError);
      continue;
    }
    auto r = flats_of_levi_structure(p);
    CHECK(r.levi_closed);
    CHECK(r.four_part_union);
    CHECK(r.jordan_dedekind);
    CHECK(r.coproduct_matches);
    CHECK(r.components == 2);
    CHECK(levi_independents(p) == all_c_independent_sets(levi(p)));
  }
  std::vector<VertexSet> all3;
  for (std::uint64_t b = 0; b < 64; ++b)
    if (std::popcount(b) <= 3) all3.push_back(VertexSet(b));
  std::sort(all3.begin(), all3.end());
  CHECK(levi_independents(fixtures::triangle()) == all3);
}

TEST_CASE("restricted Hasse graph is Levi of Geo") {
  for (const char* name : {"coimbra", "petersen", "heawood", "g5", "g3"}) {
    Graph g = catalog::by_name(name);
    CHECK(graphs_isomorphic(restricted_hasse_graph(flats(g)), levi(geo(g))));
  }
  for (int n = 4; n <= 7; ++n)
    for (const auto& g : all_graphs(n))
      if (is_sc3(g) && metrics(g).min_degree >= 2) {
        CHECK(graphs_isomorphic(restricted_hasse_graph(flats(g)), levi(geo(g))));
      }
  CHECK(peg_isomorphic(geo(catalog::petersen()), fixtures::desargues_configuration()));
  PEG c = geo(catalog::coimbra());
  CHECK(c.points() == 7);
  std::set<std::uint64_t> stars, lines;
  for (int v = 0; v < 7; ++v) stars.insert(star(catalog::coimbra(), v).bits());
  for (auto l : c.lines()) lines.insert(l.bits());
  CHECK(lines == stars);
}

TEST_CASE("graph isomorphism via Levi graphs") {
  std::vector<Graph> pool;
  for (int n = 3; n <= 6; ++n)
    for (const auto& g : connected_graphs(n))
      if (metrics(g).min_degree >= 2) pool.push_back(g);
  for (const char* name : {"cube", "coimbra", "sober-example", "hn:4", "tilde-hn:4"}) pool.push_back(catalog::by_name(name));
  std::vector<std::string> gk, lk;
  for (const auto& g : pool) {
    gk.push_back(canonical_form(g).key);
    lk.push_back(canonical_form(levi(graph_as_peg(g))).key);
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) CHECK((gk[i] == gk[j]) == (lk[i] == lk[j]));
}
