#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superflats/catalog.hpp"
#include "superflats/complement.hpp"
#include "superflats/errors.hpp"
#include "superflats/flats.hpp"
#include "superflats/geometry.hpp"
#include "superflats/graph_io.hpp"
#include "superflats/isomorphism.hpp"
#include "superflats/limits.hpp"
#include "superflats/minors.hpp"
#include "superflats/verify.hpp"

using nlohmann::json;
using namespace superflats;

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, size_limit = 3, precondition = 4, other = 5 };

struct Options {
  std::string graph;
  std::string format = "edges";
  std::string dot;
  bool json_flag = false;
  bool count_only = false;
  int max_n = 6;
  std::uint64_t seed = 1;
  int m = 2;
  std::string graph6_input;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file (in --format), a catalog spec, or a literal graph6 string.
Graph load_graph(const Options& o) {
  if (std::filesystem::is_regular_file(o.graph)) {
    std::string text = read_file(o.graph);
    return o.format == "graph6" ? parse_graph6(text) : parse_edge_list(text);
  }
  std::string base = o.graph.substr(0, o.graph.find(':'));
  for (const auto& e : catalog::entries())
    if (e.name == base) return catalog::by_name(o.graph);
  try {
    return parse_graph6(o.graph);
  } catch (const ParseError&) {
    throw ParseError("'" + o.graph + "' is neither a file, a catalog name nor a graph6 string");
  }
}

// A fixture name, a PEG text file, or any graph accepted by load_graph
// (taken through Geo).
PEG load_peg(const Options& o) {
  if (o.graph == "fano") return fixtures::fano();
  if (o.graph == "desargues-configuration") return fixtures::desargues_configuration();
  if (o.graph == "triangle") return fixtures::triangle();
  if (std::filesystem::is_regular_file(o.graph) && o.format == "peg") return parse_peg(read_file(o.graph));
  return geo(load_graph(o));
}

json set_json(VertexSet s) { return s.to_vector(); }

json family_json(const std::vector<VertexSet>& family) {
  json out = json::array();
  for (auto s : family) out.push_back(set_json(s));
  return out;
}

json graph_json(const Graph& g) {
  return json{{"graph6", to_graph6(g)}, {"vertices", g.order()}, {"edges", g.size()}};
}

json peg_json(const PEG& p) {
  json j{{"points", p.points()}, {"lines", family_json(p.lines())}, {"connected", peg_connected(p)},
         {"sober", peg_is_sober(p)}};
  if (auto s = configuration_signature(p)) {
    j["signature"] = json{{"m", s->m}, {"c", s->c}, {"n", s->n}, {"d", s->d}};
  } else {
    j["signature"] = nullptr;
  }
  return j;
}

void write_dot(const Options& o, const std::string& text) {
  if (o.dot.empty()) return;
  std::ofstream out(o.dot);
  if (!out) throw ParseError("cannot write " + o.dot);
  out << text;
}

json run(const std::string& command, const Options& o, int& exit_code) {
  if (command == "verify-theorems") {
    VerifyOptions vo;
    vo.max_n = o.max_n;
    vo.seed = o.seed;
    json checks = json::array();
    bool all = true;
    for (const auto& r : verify_theorems(vo)) {
      checks.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      all = all && r.passed;
    }
    if (!all) exit_code = verify_failed;
    return json{{"checks", checks}, {"passed", all}, {"max_n", o.max_n}, {"seed", o.seed}};
  }
  if (command == "forbidden") {
    std::vector<Graph> source;
    if (!o.graph6_input.empty()) source = parse_graph6_stream(read_file(o.graph6_input));
    auto family = forbidden_family(o.m, o.graph6_input.empty() ? nullptr : &source);
    json graphs = json::array();
    for (const auto& g : family) {
      graphs.push_back(json{{"graph6", to_graph6(g)}, {"n", g.order()}, {"c_rank", c_rank(g)},
                            {"canonical", canonical_form(g).key}});
    }
    return json{{"m", o.m}, {"count", family.size()}, {"graphs", graphs}};
  }
  if (command == "levi") {
    PEG p = load_peg(o);
    Graph l = levi(p);
    write_dot(o, to_dot(l, "Levi"));
    json j{{"peg", peg_json(p)}, {"levi", graph_json(l)}, {"girth", girth(l)}};
    if (peg_is_sober(p) && peg_connected(p) && p.min_degree() >= 2) {
      auto r = flats_of_levi_structure(p);
      j["flats_structure"] = json{{"levi_closed", r.levi_closed},         {"four_part_union", r.four_part_union},
                                  {"jordan_dedekind", r.jordan_dedekind}, {"coproduct_matches", r.coproduct_matches},
                                  {"components", r.components},           {"flats", r.flats}};
      j["independents_count"] = levi_independents(p).size();
    }
    return j;
  }

  Graph g = load_graph(o);
  if (command == "crank") return json{{"c_rank", c_rank(g)}};
  if (command == "flats") {
    SetLattice fl = flats(g);
    write_dot(o, fl.to_dot(g.labels()));
    return json{{"c_rank", fl.height()}, {"count", fl.size()}, {"flats", family_json(fl.elements())}};
  }
  if (command == "independents") {
    auto family = all_c_independent_sets(g);
    json j{{"count", family.size()}};
    if (!o.count_only) j["sets"] = family_json(family);
    return j;
  }
  if (command == "geo") {
    PEG p = geo(g);
    write_dot(o, to_dot(levi(p), "Levi"));
    return peg_json(p);
  }
  if (command == "cmrank") {
    auto r = cm_rank_certified(g);
    return json{{"cm_rank", r.rank}, {"c_rank", c_rank(g)}, {"partition", family_json(r.partition)},
                {"minor", graph_json(r.minor)}};
  }
  if (command == "complement") {
    auto r = rank_sum_report(g);
    return json{{"n", r.n},
                {"c_rank", r.c_rank},
                {"complement_c_rank", r.complement_c_rank},
                {"complement_c_rank_dual", complement_rank_both_ways(g)},
                {"sum", r.sum},
                {"sqrt2_bound", r.sqrt2_bound},
                {"sqrt2_bound_holds", r.sqrt2_bound_holds},
                {"chromatic", r.chromatic},
                {"chromatic_bound_holds", r.chromatic_bound_holds}};
  }
  // analyze
  write_dot(o, to_dot(g));
  auto m = metrics(g);
  auto inf = [](int x) { return x == kInfinity ? json(nullptr) : json(x); };
  SetLattice fl = flats(g);
  json j{{"graph", graph_json(g)},
         {"girth", inf(m.girth)},
         {"diameter", inf(m.diameter)},
         {"min_degree", m.min_degree},
         {"max_degree", m.max_degree},
         {"connected", m.connected},
         {"bipartite", m.bipartite},
         {"cubic", m.cubic},
         {"components", m.components},
         {"sober", is_sober(g)},
         {"closed", is_closed_graph(g)},
         {"c_rank", fl.height()},
         {"flats", fl.size()},
         {"jordan_dedekind", is_jordan_dedekind(fl)},
         {"semimodular", is_semimodular(fl)},
         {"modular", is_modular(fl)},
         {"distributive", is_distributive(fl)},
         {"geometric", is_geometric(fl)},
         {"sc3", is_sc3(g)}};
  if (is_sc3(g)) j["potential_lines"] = family_json(potential_lines(g));
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flats, c-rank and geometry of finite graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_flag, "Emit JSON (the default and only output format)");

  auto add_graph = [&](CLI::App* sub, const char* what) {
    sub->add_option("graph", o.graph, what)->required();
    sub->add_option("--format", o.format, "Input file format")->check(CLI::IsMember({"edges", "graph6", "peg"}));
  };
  auto add_dot = [&](CLI::App* sub) { sub->add_option("--dot", o.dot, "Write a DOT diagram to FILE"); };

  const char* graph_help = "Graph file, catalog name (e.g. petersen, kmn:3,3) or graph6 string";
  auto* analyze = app.add_subcommand("analyze", "Metrics, rank and lattice predicates");
  add_graph(analyze, graph_help);
  add_dot(analyze);
  auto* flats_cmd = app.add_subcommand("flats", "List the lattice of flats");
  add_graph(flats_cmd, graph_help);
  add_dot(flats_cmd);
  add_graph(app.add_subcommand("crank", "c-rank"), graph_help);
  auto* indep = app.add_subcommand("independents", "c-independent vertex sets");
  add_graph(indep, graph_help);
  indep->add_flag("--count", o.count_only, "Only report the number of sets");
  auto* geo_cmd = app.add_subcommand("geo", "Point-line geometry of a sober connected c-rank 3 graph");
  add_graph(geo_cmd, graph_help);
  add_dot(geo_cmd);
  auto* levi_cmd = app.add_subcommand("levi", "Levi graph of a point-line geometry and its flats");
  add_graph(levi_cmd, "fano, desargues-configuration, triangle, a PEG file (--format peg) or a graph");
  add_dot(levi_cmd);
  add_graph(app.add_subcommand("cmrank", "cm-rank with a certifying minor"), graph_help);
  add_graph(app.add_subcommand("complement", "Complement rank bounds"), graph_help);
  auto* verify = app.add_subcommand("verify-theorems", "Run the invariant suite");
  verify->add_option("--max-n", o.max_n, "Largest order for exhaustive sweeps")->check(CLI::Range(1, 7));
  verify->add_option("--seed", o.seed, "Seed for randomized sweeps");
  auto* forbidden = app.add_subcommand("forbidden", "Forbidden-minor family for cm-rank <= m");
  forbidden->add_option("--m", o.m, "Rank bound")->check(CLI::Range(0, 4));
  forbidden->add_option("--graph6-input", o.graph6_input, "Read candidate graphs from a graph6 stream");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (const char* env = std::getenv("SUPERFLATS_LIMITS")) set_limits(parse_limits(env, limits()));
    int exit_code = ok;
    json out = run(command, o, exit_code);
    out["schema"] = 1;
    std::cout << out.dump(2) << '\n';
    return exit_code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return size_limit;
  } catch (const CapacityError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return size_limit;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return precondition;
  } catch (const DomainError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return precondition;
  } catch (const AxiomError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return precondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return other;
  }
}
