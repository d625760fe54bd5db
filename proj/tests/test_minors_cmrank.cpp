#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "superflats/catalog.hpp"
#include "superflats/enumeration.hpp"
#include "superflats/errors.hpp"
#include "superflats/flats.hpp"
#include "superflats/graph_io.hpp"
#include "superflats/isomorphism.hpp"
#include "superflats/minors.hpp"

using namespace superflats;

namespace {

using Keys = std::set<std::string>;

std::vector<Graph> one_step(const Graph& g, MinorOp::Kind kind) {
  std::vector<Graph> out;
  if (kind == MinorOp::Kind::delete_vertex) {
    for (int v = 0; v < g.order(); ++v) out.push_back(apply_minor_op(g, MinorOp::delete_vertex(v)));
  } else {
    for (auto [u, v] : g.edges())
      out.push_back(apply_minor_op(g, kind == MinorOp::Kind::contract ? MinorOp::contract(u, v) : MinorOp::delete_edge(u, v)));
  }
  return out;
}

// Apply `kinds` right to left, as operator composition.
Keys compose(const Graph& g, const std::vector<MinorOp::Kind>& kinds) {
  std::vector<Graph> cur{g};
  for (auto it = kinds.rbegin(); it != kinds.rend(); ++it) {
    std::vector<Graph> next;
    for (const auto& h : cur)
      for (auto& x : one_step(h, *it)) next.push_back(std::move(x));
    cur = std::move(next);
  }
  Keys keys;
  for (const auto& h : cur) keys.insert(canonical_form(h).key);
  return keys;
}

bool subset(const Keys& a, const Keys& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }
Keys unite(Keys a, const Keys& b) {
  a.insert(b.begin(), b.end());
  return a;
}

// Every minor reachable by single operations, keyed canonically.
std::map<std::string, Graph> minor_closure(const Graph& g) {
  std::map<std::string, Graph> seen;
  std::vector<Graph> todo{g};
  seen.emplace(canonical_form(g).key, g);
  while (!todo.empty()) {
    Graph h = todo.back();
    todo.pop_back();
    for (auto kind : {MinorOp::Kind::delete_vertex, MinorOp::Kind::delete_edge, MinorOp::Kind::contract})
      for (auto& x : one_step(h, kind)) {
        auto key = canonical_form(x).key;
        if (seen.emplace(key, x).second) todo.push_back(x);
      }
  }
  return seen;
}

// Set partitions filtered by the matrix criterion: a block is connected
// iff no split of it leaves the adjacency block between the parts null.
std::size_t connected_partition_count(const Graph& g) {
  auto connected = [&](VertexSet w) {
    auto vs = w.to_vector();
    for (std::uint64_t b = 1; b + 1 < (std::uint64_t{1} << vs.size()); ++b) {
      bool null = true;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
          if (((b >> i) & 1U) && !((b >> j) & 1U) && g.has_edge(vs[i], vs[j])) null = false;
      if (null) return false;
    }
    return true;
  };
  std::size_t count = 0;
  std::vector<VertexSet> blocks;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.order()) {
      count += std::all_of(blocks.begin(), blocks.end(), connected);
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
  return count;
}

}  // namespace

TEST_CASE("minor operations") {
  CHECK(graphs_isomorphic(apply_minor_op(catalog::cycle(4), MinorOp::contract(0, 1)), catalog::complete(3)));
  CHECK(graphs_isomorphic(apply_minor_op(catalog::complete(3), MinorOp::delete_edge(0, 1)), catalog::path(3)));
  CHECK(graphs_isomorphic(apply_minor_op(catalog::complete(4), MinorOp::delete_vertex(2)), catalog::complete(3)));
  CHECK_THROWS_AS(apply_minor_op(catalog::cycle(4), MinorOp::contract(0, 2)), PreconditionError);
  CHECK_THROWS_AS(apply_minor_op(catalog::cycle(4), MinorOp::delete_vertex(4)), PreconditionError);
  CHECK(MinorOp::contract(1, 2).to_string() == "contract 1-2");
}

TEST_CASE("operator commutation containments") {
  using K = MinorOp::Kind;
  const K d1 = K::delete_vertex, d2 = K::delete_edge, c = K::contract;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      CHECK(subset(compose(g, {d1, d2}), unite(compose(g, {d2, d1}), compose(g, {d1}))));
      CHECK(subset(compose(g, {d2, d1}), compose(g, {d1, d2})));
      CHECK(subset(compose(g, {c, d1}), compose(g, {d1, c})));
      CHECK(subset(compose(g, {d1, c}), unite(compose(g, {c, d1}), compose(g, {d1, d1}))));
      CHECK(subset(compose(g, {c, d2}), unite(compose(g, {d2, c}), compose(g, {c}))));
      CHECK(subset(compose(g, {d2, c}), unite(compose(g, {c, d2}), compose(g, {c, d2, d2}))));
    }
}

TEST_CASE("connected partitions") {
  CHECK(connected_partitions(catalog::complete(2)).size() == 2);
  CHECK(connected_partitions(catalog::path(3)).size() == 4);
  CHECK(connected_partitions(catalog::cycle(4)).size() == 12);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(2 + trial % 6, 0.45, rng);
    auto parts = connected_partitions(g);
    CHECK(parts.size() == connected_partition_count(g));
    for (const auto& p : parts) {
      VertexSet all;
      for (auto b : p) {
        CHECK_FALSE(all.intersects(b));
        all |= b;
        CHECK(induces_connected(g, b));
      }
      CHECK(all == g.vertices());
    }
  }
  CHECK_THROWS_AS(connected_partitions(catalog::cycle(11)), SizeLimitError);
}

TEST_CASE("contracted wildcard matrices") {
  Graph c4 = catalog::cycle(4);
  ConnectedPartition singletons;
  for (int v = 0; v < 4; ++v) singletons.push_back(VertexSet::single(v));
  auto m = contracted_wildcard_matrix(c4, singletons);
  auto a = complemented_adjacency(c4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m.at(i, j) == (a.at(i, j) == SB::zero ? Wild::star : Wild::one));
  auto one = contracted_wildcard_matrix(c4, {c4.vertices()});
  CHECK(one.side() == 1);
  CHECK(one.at(0, 0) == Wild::one);
  auto three = contracted_wildcard_matrix(c4, {VertexSet{0, 1}, VertexSet{2}, VertexSet{3}});
  CHECK(three.to_string() == "1**\n*1*\n**1\n");
}

TEST_CASE("wildcard rank against resolutions") {
  WildcardMatrix stars(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) stars.set(i, j, Wild::star);
  CHECK(wildcard_rank(stars) == 5);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> cell(0, 2);
  int tested = 0;
  for (int trial = 0; trial < 600; ++trial) {
    int side = 1 + trial % 5;
    WildcardMatrix m(side);
    for (int i = 0; i < side; ++i)
      for (int j = 0; j < side; ++j) m.set(i, j, static_cast<Wild>(cell(rng)));
    if (m.star_count() > 10) continue;
    ++tested;
    int best = 0;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << m.star_count()); ++c) best = std::max(best, oracle::rank(m.resolve(c)));
    auto w = wildcard_rank_witness(m);
    CHECK(w.rank == best);
    for (int r = 0; r < w.rank; ++r) {
      CHECK(m.at(w.rows[r], w.cols[r]) != Wild::zero);
      for (int s = r + 1; s < w.rank; ++s) CHECK(m.at(w.rows[r], w.cols[s]) != Wild::one);
    }
    if (m.star_count() == 0) CHECK(w.rank == sb_rank(m.resolve(0)));
  }
  CHECK(tested > 300);
}

TEST_CASE("minor testing agrees with operation closure") {
  std::vector<Graph> targets = graphs_up_to(4);
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      auto closure = minor_closure(g);
      for (const auto& h : targets) {
        bool expect = closure.count(canonical_form(h).key) > 0;
        auto branch = find_minor(h, g);
        CHECK(branch.has_value() == expect);
        if (!branch) continue;
        VertexSet used;
        for (int x = 0; x < h.order(); ++x) {
          CHECK_FALSE((*branch)[x].empty());
          CHECK_FALSE(used.intersects((*branch)[x]));
          used |= (*branch)[x];
          CHECK(induces_connected(g, (*branch)[x]));
        }
        for (auto [x, y] : h.edges()) {
          bool joined = false;
          for (int v : (*branch)[x]) joined = joined || g.neighbors(v).intersects((*branch)[y]);
          CHECK(joined);
        }
      }
    }
  CHECK(is_minor(catalog::complete(3), catalog::cycle(4)));
  CHECK(is_minor(catalog::complete(5), catalog::petersen()));
  CHECK_FALSE(is_minor(catalog::complete(4), catalog::path(7)));
  CHECK_FALSE(is_minor(catalog::complete(4), catalog::star_graph(6)));
}

TEST_CASE("cm-rank against the minor closure") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      int best = 0;
      for (auto& [key, h] : minor_closure(g)) best = std::max(best, c_rank(h));
      auto r = cm_rank_certified(g);
      CHECK(r.rank == best);
      CHECK(r.rank >= c_rank(g));
      CHECK(c_rank(r.minor) == r.rank);
      if (n > 0) CHECK(is_minor(r.minor, g));
    }
  auto c4 = cm_rank_certified(catalog::cycle(4));
  CHECK(c4.rank == 3);
  CHECK(graphs_isomorphic(c4.minor, catalog::complete(3)));
  for (int n = 1; n <= 7; ++n) CHECK(cm_rank(catalog::complete(n)) == n);
  CHECK_THROWS_AS(cm_rank(catalog::cycle(10)), SizeLimitError);
}

TEST_CASE("cm-rank is minor monotone") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(4 + trial % 4, 0.5, rng);
    int before = cm_rank(g);
    CHECK(before >= c_rank(g));
    for (int step = 0; step < 3 && g.order() > 1; ++step) {
      int kind = std::uniform_int_distribution<int>(0, 2)(rng);
      auto edges = g.edges();
      if (kind == 0 || edges.empty()) {
        g = apply_minor_op(g, MinorOp::delete_vertex(std::uniform_int_distribution<int>(0, g.order() - 1)(rng)));
      } else {
        auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
        g = apply_minor_op(g, kind == 1 ? MinorOp::delete_edge(u, v) : MinorOp::contract(u, v));
      }
      int after = cm_rank(g);
      CHECK(after <= before);
      before = after;
    }
  }
}

TEST_CASE("forbidden families") {
  auto f0 = forbidden_family(0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].order() == 1);
  auto f1 = forbidden_family(1);
  REQUIRE(f1.size() == 1);
  CHECK(graphs_isomorphic(f1[0], catalog::complete(2)));
  auto f2 = forbidden_family(2);
  for (const auto& g : f2) {
    CHECK(g.order() <= 4);
    CHECK(c_rank(g) == 3);
  }
  std::size_t expect = 0;
  std::set<std::string> seen;
  for (int n = 0; n <= 4; ++n)
    for (const auto& g : parse_graph6_stream(labelled_graph6_stream(n)))
      if (oracle::c_rank(g) == 3 && seen.insert(oracle::canonical(g)).second) ++expect;
  CHECK(f2.size() == expect);
  std::vector<Graph> stream;
  for (int n = 0; n <= 4; ++n) {
    auto s = parse_graph6_stream(labelled_graph6_stream(n));
    stream.insert(stream.end(), s.begin(), s.end());
  }
  auto from_stream = forbidden_family(2, &stream);
  REQUIRE(from_stream.size() == f2.size());
  for (std::size_t i = 0; i < f2.size(); ++i) CHECK(from_stream[i].edges() == f2[i].edges());
}

TEST_CASE("forbidden minors characterize bounded cm-rank") {
  for (int m = 0; m <= 2; ++m) {
    auto family = forbidden_family(m);
    for (int n = 0; n <= 5; ++n)
      for (const auto& g : all_graphs(n)) {
        bool avoids = std::none_of(family.begin(), family.end(), [&](const Graph& f) { return is_minor(f, g); });
        CHECK(avoids == (cm_rank(g) <= m));
      }
  }
}
