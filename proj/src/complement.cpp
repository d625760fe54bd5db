#include "superflats/complement.hpp"

#include <cmath>
#include <stdexcept>

#include "superflats/enumeration.hpp"
#include "superflats/flats.hpp"

namespace superflats {

namespace {

bool spans_edge(const Graph& g, VertexSet w) {
  for (int v : w)
    if (g.neighbors(v).intersects(w)) return true;
  return false;
}

}  // namespace

RankSumReport rank_sum_report(const Graph& g) {
  RankSumReport r;
  r.n = g.order();
  r.c_rank = c_rank(g);
  r.complement_c_rank = c_rank(complement(g));
  r.sum = r.c_rank + r.complement_c_rank;
  r.chromatic = exact_chromatic(g);
  r.sqrt2_bound = std::sqrt(2.0) * r.n + 1;
  long long excess = r.sum - 1;
  r.sqrt2_bound_holds = excess < 0 || excess * excess < 2LL * r.n * r.n;
  r.chromatic_bound_holds = static_cast<long long>(r.complement_c_rank) * r.chromatic >= r.n;
  return r;
}

int complement_rank_both_ways(const Graph& g) {
  int direct = c_rank(complement(g));
  int dual = complement_c_rank_via_duality(g);
  if (direct != dual) {
    throw std::logic_error("complement c-rank: direct " + std::to_string(direct) + " vs dual lattice " +
                           std::to_string(dual));
  }
  return direct;
}

bool classical_independents_are_c_independent_in_complement(const Graph& g) {
  Graph gc = complement(g);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits) {
    VertexSet w(bits);
    if (!spans_edge(g, w) && !is_c_independent(gc, w).independent) return false;
  }
  return true;
}

std::optional<ConverseCounterexample> find_converse_counterexample(int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& g : all_graphs(n))
      for (auto w : all_c_independent_sets(complement(g)))
        if (spans_edge(g, w)) return ConverseCounterexample{g, w};
  return std::nullopt;
}

}  // namespace superflats
