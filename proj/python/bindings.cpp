#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superflats/catalog.hpp"
#include "superflats/complement.hpp"
#include "superflats/errors.hpp"
#include "superflats/flats.hpp"
#include "superflats/geometry.hpp"
#include "superflats/graph_io.hpp"
#include "superflats/isomorphism.hpp"
#include "superflats/minors.hpp"
#include "superflats/sb_matrix.hpp"

namespace py = pybind11;
using namespace superflats;

namespace {

using Family = std::vector<std::vector<int>>;

Family to_lists(const std::vector<VertexSet>& family) {
  Family out;
  for (auto s : family) out.push_back(s.to_vector());
  return out;
}

VertexSet to_set(const std::vector<int>& xs) {
  VertexSet s;
  for (int x : xs) {
    if (x < 0 || x >= kMaxVertices) throw py::index_error("vertex " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  return s;
}

SBMatrix to_matrix(const std::vector<std::vector<int>>& rows) {
  for (const auto& r : rows)
    for (int x : r)
      if (x < 0 || x > 2) throw py::value_error("matrix entries must be 0, 1 or 2 (for 1ν)");
  return SBMatrix::from_rows(rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Flats, c-rank and point-line geometry of finite graphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<AxiomError>(m, "AxiomError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<PEG>(m, "PEG")
      .def(py::init([](int points, const Family& lines) {
             std::vector<VertexSet> ls;
             for (const auto& l : lines) ls.push_back(to_set(l));
             return PEG(points, std::move(ls));
           }),
           py::arg("points"), py::arg("lines"))
      .def_property_readonly("points", &PEG::points)
      .def_property_readonly("lines", [](const PEG& p) { return to_lists(p.lines()); })
      .def("text", [](const PEG& p) { return to_peg_text(p); });

  m.def("catalog", [](const std::string& spec) { return catalog::by_name(spec); }, py::arg("spec"));
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog::entries()) names.push_back(e.name);
    return names;
  });
  m.def("from_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("from_edge_list", [](const std::string& s) { return parse_edge_list(s); });

  m.def("permanent", [](const std::vector<std::vector<int>>& rows) {
    return static_cast<int>(permanent(to_matrix(rows)));
  }, "Permanent over the superboolean semiring: 0, 1, or 2 for 1ν.");
  m.def("sb_rank", [](const std::vector<std::vector<int>>& rows) { return sb_rank(to_matrix(rows)); });

  m.def("c_rank", &c_rank);
  m.def("flats", [](const Graph& g) { return to_lists(flats(g).elements()); });
  m.def("independent_sets", [](const Graph& g) { return to_lists(all_c_independent_sets(g)); });
  m.def("is_c_independent", [](const Graph& g, const std::vector<int>& j) {
    return is_c_independent(g, to_set(j)).independent;
  });
  m.def("is_sc3", &is_sc3);
  m.def("potential_lines", [](const Graph& g) { return to_lists(potential_lines(g)); });
  m.def("canonical_key", [](const Graph& g) { return canonical_form(g).key; });
  m.def("isomorphic", &graphs_isomorphic);
  m.def("complement", &complement);

  m.def("geo", &geo);
  m.def("levi", &levi);
  m.def("dual", &dual_peg);
  m.def("peg_isomorphic", &peg_isomorphic);
  m.def("fano", &fixtures::fano);
  m.def("desargues_configuration", &fixtures::desargues_configuration);
  m.def("levi_flats_report", [](const PEG& p) {
    auto r = flats_of_levi_structure(p);
    py::dict d;
    d["levi_closed"] = r.levi_closed;
    d["four_part_union"] = r.four_part_union;
    d["jordan_dedekind"] = r.jordan_dedekind;
    d["coproduct_matches"] = r.coproduct_matches;
    d["components"] = r.components;
    d["flats"] = r.flats;
    return d;
  });
  m.def("levi_independents", [](const PEG& p) { return to_lists(levi_independents(p)); });

  m.def("cm_rank", &cm_rank);
  m.def("is_minor", &is_minor, py::arg("h"), py::arg("g"));
  m.def("forbidden_family", [](int mm) {
    std::vector<std::string> out;
    for (const auto& g : forbidden_family(mm)) out.push_back(to_graph6(g));
    return out;
  });

  m.def("rank_sum_report", [](const Graph& g) {
    auto r = rank_sum_report(g);
    py::dict d;
    d["n"] = r.n;
    d["c_rank"] = r.c_rank;
    d["complement_c_rank"] = r.complement_c_rank;
    d["sum"] = r.sum;
    d["chromatic"] = r.chromatic;
    d["sqrt2_bound_holds"] = r.sqrt2_bound_holds;
    d["chromatic_bound_holds"] = r.chromatic_bound_holds;
    return d;
  });
  m.def("complement_rank", &complement_rank_both_ways);
}
