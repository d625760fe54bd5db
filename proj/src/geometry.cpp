#include "superflats/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "superflats/errors.hpp"
#include "superflats/flats.hpp"
#include "superflats/isomorphism.hpp"

namespace superflats {

PEG::PEG(int points, std::vector<VertexSet> lines) : points_(points), lines_(std::move(lines)) {
  if (points < 0 || points > kMaxVertices) throw CapacityError("a PEG holds at most 64 points");
  if (line_count() > kMaxVertices) throw CapacityError("a PEG holds at most 64 lines");
  VertexSet all = VertexSet::full(points);
  for (int i = 0; i < line_count(); ++i) {
    if (!lines_[i].subset_of(all)) {
      throw AxiomError(1, "line " + std::to_string(i) + " uses a point outside 0.." +
                              std::to_string(points - 1));
    }
  }
  pencils_.assign(points, VertexSet{});
  for (int i = 0; i < line_count(); ++i)
    for (int pt : lines_[i]) pencils_[pt].insert(i);
  for (int pt = 0; pt < points; ++pt) {
    if (pencils_[pt].empty()) throw AxiomError(1, "point " + std::to_string(pt) + " lies on no line");
  }
  for (int i = 0; i < line_count(); ++i)
    for (int j = i + 1; j < line_count(); ++j)
      if ((lines_[i] & lines_[j]).size() > 1) {
        throw AxiomError(2, "lines " + std::to_string(i) + " and " + std::to_string(j) +
                                " share " + (lines_[i] & lines_[j]).to_string());
      }
  for (int i = 0; i < line_count(); ++i) {
    if (lines_[i].size() < 2) {
      throw AxiomError(3, "line " + std::to_string(i) + " = " + lines_[i].to_string() +
                              " has fewer than two points");
    }
  }
}

int PEG::min_degree() const {
  int m = kInfinity;
  for (auto s : pencils_) m = std::min(m, s.size());
  for (auto l : lines_) m = std::min(m, l.size());
  return m == kInfinity ? 0 : m;
}

PEG validate_peg(int points, std::vector<VertexSet> lines) { return PEG(points, std::move(lines)); }

PEG parse_peg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int points = -1;
  std::vector<VertexSet> lines;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (points < 0) {
      if (first != "points" || !(words >> points) || points < 0) {
        throw ParseError("PEG text must start with 'points n'");
      }
      continue;
    }
    VertexSet l;
    std::istringstream items(line);
    long long v = 0;
    while (items >> v) {
      if (v < 0 || v >= points) throw ParseError("PEG point " + std::to_string(v) + " out of range");
      l.insert(static_cast<int>(v));
    }
    if (!items.eof()) throw ParseError("PEG line has a non-numeric token");
    lines.push_back(l);
  }
  if (points < 0) throw ParseError("PEG text must start with 'points n'");
  if (points > kMaxVertices) throw CapacityError("a PEG holds at most 64 points");
  return PEG(points, std::move(lines));
}

std::string to_peg_text(const PEG& p) {
  std::string out = "points " + std::to_string(p.points()) + "\n";
  for (auto l : p.lines()) {
    bool first = true;
    for (int v : l) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

PEG geo(const Graph& g) {
  require_sc3(g, "geo");
  std::vector<VertexSet> lines;
  SetLattice fl = flats(g);
  for (auto x : fl.elements())
    if (x != g.vertices() && x.size() >= 2) lines.push_back(x);
  return PEG(g.order(), std::move(lines));
}

PEG graph_as_peg(const Graph& g) {
  std::vector<VertexSet> lines;
  for (auto [u, v] : g.edges()) lines.push_back(VertexSet{u, v});
  return PEG(g.order(), std::move(lines));
}

std::optional<ConfigurationSignature> configuration_signature(const PEG& p) {
  if (p.points() == 0 || p.line_count() == 0) return std::nullopt;
  int c = p.pencil(0).size(), d = p.line(0).size();
  for (int x = 0; x < p.points(); ++x)
    if (p.pencil(x).size() != c) return std::nullopt;
  for (auto l : p.lines())
    if (l.size() != d) return std::nullopt;
  ConfigurationSignature s{p.points(), c, p.line_count(), d};
  if (s.c * s.m != s.d * s.n) throw std::logic_error("configuration counts violate cm = dn");
  return s;
}

Graph levi(const PEG& p) {
  int np = p.points();
  Graph g(np + p.line_count());
  for (int i = 0; i < p.line_count(); ++i)
    for (int x : p.line(i)) g.add_edge(x, np + i);
  std::vector<std::string> labels;
  for (int x = 0; x < np; ++x) labels.push_back("p" + std::to_string(x));
  for (int i = 0; i < p.line_count(); ++i) labels.push_back("L" + std::to_string(i));
  g.set_labels(std::move(labels));
  return g;
}

bool peg_connected(const PEG& p) {
  // Grow one block of lines through shared points; connected iff it takes
  // every line.
  if (p.line_count() == 0) return true;
  VertexSet reached = VertexSet::single(0), covered = p.line(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < p.line_count(); ++i) {
      if (reached.contains(i) || !p.line(i).intersects(covered)) continue;
      reached.insert(i);
      covered |= p.line(i);
      grew = true;
    }
  }
  return reached.size() == p.line_count();
}

bool peg_is_sober(const PEG& p) {
  std::vector<std::uint64_t> pencils;
  for (int x = 0; x < p.points(); ++x) pencils.push_back(p.pencil(x).bits());
  std::sort(pencils.begin(), pencils.end());
  return std::adjacent_find(pencils.begin(), pencils.end()) == pencils.end();
}

PEG dual_peg(const PEG& p) {
  if (p.min_degree() < 2) throw PreconditionError("dual_peg needs every point on at least two lines");
  std::vector<VertexSet> lines;
  for (int x = 0; x < p.points(); ++x) lines.push_back(p.pencil(x));
  return PEG(p.line_count(), std::move(lines));
}

namespace {

ColoredGraph colored_levi(const PEG& p) {
  std::vector<int> colors(p.points(), 0);
  colors.resize(p.points() + p.line_count(), 1);
  return ColoredGraph::from_graph(levi(p), std::move(colors));
}

void require_levi_structure(const PEG& p, const char* op) {
  std::string name(op);
  if (!peg_is_sober(p)) throw DomainError(name + " needs a sober PEG");
  if (!peg_connected(p)) throw DomainError(name + " needs a connected PEG");
  if (p.min_degree() < 2) throw DomainError(name + " needs minimum degree >= 2");
}

}  // namespace

bool peg_isomorphic(const PEG& a, const PEG& b) {
  if (a.points() != b.points() || a.line_count() != b.line_count()) return false;
  return colored_isomorphism(colored_levi(a), colored_levi(b)).has_value();
}

SetLattice lat_peg(const PEG& p) {
  return SetLattice::close_under_intersection(p.points(), p.lines());
}

LeviFlatsReport flats_of_levi_structure(const PEG& p) {
  require_levi_structure(p, "flats_of_levi_structure");
  LeviFlatsReport r;
  Graph lg = levi(p);
  SetLattice fl = flats(lg);
  r.flats = fl.size();
  r.levi_closed = is_closed_graph(lg);

  int np = p.points();
  std::vector<VertexSet> expected{lg.vertices(), VertexSet{}};
  for (int v = 0; v < lg.order(); ++v) expected.push_back(VertexSet::single(v));
  for (auto l : p.lines()) expected.push_back(l);
  for (int x = 0; x < np; ++x) expected.push_back(VertexSet(p.pencil(x).bits() << np));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  r.four_part_union = expected == fl.elements();
  r.jordan_dedekind = is_jordan_dedekind(fl);

  auto parts = coproduct_decompose(fl);
  r.components = static_cast<int>(parts.size());
  if (parts.size() == 2) {
    SetLattice lat = lat_peg(p), dual = lat_peg(dual_peg(p));
    r.coproduct_matches = (lattice_isomorphic(parts[0], lat) && lattice_isomorphic(parts[1], dual)) ||
                          (lattice_isomorphic(parts[0], dual) && lattice_isomorphic(parts[1], lat));
  }
  return r;
}

std::vector<VertexSet> levi_independents(const PEG& p) {
  require_levi_structure(p, "levi_independents");
  int np = p.points(), total = np + p.line_count();
  std::vector<VertexSet> blocks;  // lines as point sets, pencils as line-vertex sets
  for (auto l : p.lines()) blocks.push_back(l);
  for (int x = 0; x < np; ++x) blocks.push_back(VertexSet(p.pencil(x).bits() << np));
  std::vector<VertexSet> out{VertexSet{}};
  for (int a = 0; a < total; ++a) {
    out.push_back(VertexSet{a});
    for (int b = a + 1; b < total; ++b) {
      out.push_back(VertexSet{a, b});
      for (int c = b + 1; c < total; ++c) {
        VertexSet w{a, b, c};
        if (std::any_of(blocks.begin(), blocks.end(), [&](VertexSet s) { return (w & s).size() == 2; })) {
          out.push_back(w);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace fixtures {

PEG fano() {
  return PEG(7, {VertexSet{0, 1, 2}, VertexSet{0, 3, 4}, VertexSet{0, 5, 6}, VertexSet{1, 3, 5},
                 VertexSet{1, 4, 6}, VertexSet{2, 3, 6}, VertexSet{2, 4, 5}});
}

PEG desargues_configuration() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  auto index = [&](int a, int b) {
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
  };
  std::vector<VertexSet> lines;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) lines.push_back(VertexSet{index(a, b), index(a, c), index(b, c)});
  return PEG(10, std::move(lines));
}

PEG triangle() { return PEG(3, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}}); }

}  // namespace fixtures

}  // namespace superflats
