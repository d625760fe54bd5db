#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "superflats/catalog.hpp"
#include "superflats/enumeration.hpp"
#include "superflats/errors.hpp"
#include "superflats/flats.hpp"
#include "superflats/set_lattice.hpp"

using namespace superflats;

namespace {

// Stars closed under pairwise intersection until nothing new appears.
std::set<std::uint64_t> naive_flats(const Graph& g) {
  std::set<std::uint64_t> f{g.vertices().bits()};
  for (int v = 0; v < g.order(); ++v) f.insert(g.neighbors(v).bits());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(f.begin(), f.end());
    for (auto a : cur)
      for (auto b : cur) grew |= f.insert(a & b).second;
  }
  return f;
}

VertexSet labels(std::initializer_list<int> one_based) {
  VertexSet s;
  for (int x : one_based) s.insert(x - 1);
  return s;
}

}  // namespace

TEST_CASE("flats match naive closure and c-rank matches permanents") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      std::set<std::uint64_t> got;
      SetLattice fl = flats(g);
      for (auto x : fl.elements()) got.insert(x.bits());
      CHECK(got == naive_flats(g));
      CHECK(c_rank(g) == oracle::c_rank(g));
    }
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(6, 0.5, rng);
    CHECK(c_rank(g) == oracle::c_rank(g));
  }
}

TEST_CASE("independent sets against the permanent definition") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      auto family = all_c_independent_sets(g);
      std::set<std::uint64_t> in;
      for (auto j : family) in.insert(j.bits());
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        bool expect = oracle::c_independent(g, b);
        CHECK((in.count(b) > 0) == expect);
        auto r = is_c_independent(g, VertexSet(b));
        CHECK(r.independent == expect);
        CHECK(is_c_independent_by_witness(g, VertexSet(b)) == expect);
        CHECK(is_c_independent_by_transversal(g, VertexSet(b)) == expect);
        if (expect && b) {
          auto a = complemented_adjacency(g);
          int k = static_cast<int>(r.rows.size());
          REQUIRE(k == std::popcount(b));
          for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) CHECK(a.at(r.rows[i], r.cols[j]) == (i == j ? SB::one : SB::zero));
        }
      }
    }
}

TEST_CASE("recursive criterion") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(3 + trial % 7, 0.4, rng);
    CHECK(c_rank_recursive(g) == c_rank(g));
  }
}

TEST_CASE("small c-ranks") {
  CHECK(c_rank(catalog::petersen()) == 3);
  CHECK(c_rank(catalog::complete(4)) == 4);
  CHECK(c_rank(catalog::complete_bipartite(3, 3)) == 2);
  CHECK(c_rank(catalog::cycle(4)) == 2);
  CHECK(c_rank(Graph(0)) == 0);
  CHECK(c_rank(catalog::empty(3)) == 1);
  CHECK(c_rank(catalog::cube()) == 4);
}

TEST_CASE("low rank classification certificates") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      auto c = classify_low_rank(g);
      CHECK(c.rank == c_rank(g));
      CHECK(c.structural_rank == std::min(c.rank, 5));
    }
}

TEST_CASE("coimbra example") {
  Graph g = catalog::coimbra();
  std::set<std::uint64_t> printed{0, g.vertices().bits()};
  for (int v = 1; v <= 7; ++v) printed.insert(labels({v}).bits());
  for (auto s : {labels({4, 5, 6}), labels({2, 3, 4}), labels({1, 2, 5}), labels({1, 3, 6}), labels({2, 7}),
                 labels({3, 7}), labels({1, 7})})
    printed.insert(s.bits());
  SetLattice fl = flats(g);
  std::set<std::uint64_t> got;
  for (auto x : fl.elements()) got.insert(x.bits());
  CHECK(got == printed);
  CHECK(fl.size() == 16);
  CHECK(is_sc3(g));
  CHECK(potential_lines(g).empty());
  std::set<std::uint64_t> excluded{labels({1, 2, 5}).bits(), labels({1, 3, 6}).bits(), labels({2, 3, 4}).bits(),
                                   labels({4, 5, 6}).bits()};
  std::vector<VertexSet> expect;
  for (std::uint64_t b = 0; b < 128; ++b)
    if (std::popcount(b) <= 3 && !excluded.count(b)) expect.push_back(VertexSet(b));
  std::sort(expect.begin(), expect.end());
  CHECK(all_c_independent_sets(g) == expect);
  CHECK(sc3_independents(g) == expect);
}

TEST_CASE("SC3 independents and potential lines") {
  int sc3 = 0;
  for (int n = 3; n <= 7; ++n)
    for (const auto& g : all_graphs(n)) {
      if (!is_sc3(g)) {
        CHECK_THROWS_AS(sc3_independents(g), DomainError);
        continue;
      }
      ++sc3;
      CHECK(sc3_independents(g) == all_c_independent_sets(g));
      for (auto l : potential_lines(g)) {
        CHECK(l.size() == 3);
        for (int v = 0; v < n; ++v) CHECK((g.neighbors(v) & l).size() <= 1);
      }
    }
  CHECK(sc3 > 10);
  for (const char* name : {"petersen", "heawood", "g5", "g3"}) {
    Graph g = catalog::by_name(name);
    CHECK(sc3_independents(g) == all_c_independent_sets(g));
  }
  CHECK(potential_lines(catalog::heawood()).empty());
  CHECK(potential_lines(catalog::diameter5_sc3()).empty());
  CHECK(!potential_lines(catalog::diameter3_with_lines()).empty());
}

TEST_CASE("exchange property") {
  std::vector<VertexSet> uniform;
  for (std::uint64_t b = 0; b < 16; ++b)
    if (std::popcount(b) <= 2) uniform.push_back(VertexSet(b));
  CHECK_FALSE(exchange_violation(uniform).has_value());
  auto v = exchange_violation({VertexSet{}, VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}, VertexSet{0, 1},
                               VertexSet{2, 3}, VertexSet{0, 1, 2}, VertexSet{0, 2}, VertexSet{1, 2}});
  CHECK(v.has_value());
}

TEST_CASE("closed vertices") {
  CHECK(closed_vertices(catalog::complete(2)) == VertexSet{0, 1});
  CHECK(is_closed_graph(catalog::petersen()));
  CHECK_FALSE(is_closed_graph(catalog::complete_bipartite(2, 3)));
}

TEST_CASE("complement rank through the dual lattice") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(2 + trial % 5, 0.5, rng);
    CHECK(complement_c_rank_via_duality(g) == oracle::c_rank(complement(g)));
  }
  CHECK(complement_c_rank_via_duality(catalog::petersen()) == 5);
}

TEST_CASE("lattice predicates on standard lattices") {
  auto b3 = boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(is_distributive(b3));
  CHECK(is_modular(b3));
  CHECK(is_geometric(b3));
  CHECK(is_jordan_dedekind(b3));
  auto m3 = SetLattice::close_under_intersection(3, {VertexSet{0}, VertexSet{1}, VertexSet{2}});
  CHECK(m3.size() == 5);
  CHECK(is_modular(m3));
  CHECK(satisfies_modular_law(m3));
  CHECK_FALSE(is_distributive(m3));
  CHECK(is_atomistic(m3));
  CHECK(coproduct_components(m3).size() == 3);
  auto n5 = pentagon_lattice();
  CHECK_FALSE(is_modular(n5));
  CHECK_FALSE(satisfies_modular_law(n5));
  CHECK(find_n5(n5).has_value());
  CHECK_FALSE(is_jordan_dedekind(n5));
  auto ch = extreme_maximal_chains(n5);
  CHECK(ch.longest.size() == 4);
  CHECK(ch.shortest.size() == 3);
  CHECK(maximal_chains(n5).size() == 2);
  CHECK(maximal_chains(b3).size() == 6);
  CHECK(lattice_isomorphic(b3, SetLattice::close_under_intersection(3, {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 2}})));
  CHECK_FALSE(lattice_isomorphic(m3, n5));
  auto chain = SetLattice::close_under_intersection(2, {VertexSet{}, VertexSet{0}});
  CHECK(restricted_hasse_graph(chain).order() == 1);
  auto chain3 = SetLattice::close_under_intersection(3, {VertexSet{}, VertexSet{0}, VertexSet{0, 1}});
  CHECK(chain3.height() == 3);
  auto h = restricted_hasse_graph(chain3);
  CHECK(h.order() == 2);
  CHECK(h.size() == 1);
}

TEST_CASE("meets, joins and covers") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    SetLattice fl = flats(oracle::random_graph(7, 0.4, rng));
    for (int a = 0; a < fl.size(); ++a)
      for (int b = 0; b < fl.size(); ++b) {
        int m = fl.meet(a, b), j = fl.join(a, b);
        CHECK(fl.element(m) == (fl.element(a) & fl.element(b)));
        for (int c = 0; c < fl.size(); ++c) {
          if (fl.leq(a, c) && fl.leq(b, c)) CHECK(fl.leq(j, c));
        }
        bool cover = a != b && fl.leq(b, a);
        for (int c = 0; c < fl.size() && cover; ++c)
          if (c != a && c != b && fl.leq(b, c) && fl.leq(c, a)) cover = false;
        CHECK(fl.covers(a, b) == cover);
      }
  }
}

TEST_CASE("cubic lattice theorem preconditions") {
  CHECK_THROWS_AS(cubic_lattice_theorems(catalog::cycle(5)), PreconditionError);
  auto r = cubic_lattice_theorems(catalog::complete(4));
  CHECK(r.iso_k4);
  CHECK(r.distributive);
  CHECK(r.all_agree());
}
