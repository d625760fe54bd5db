#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superflats/graph.hpp"

namespace superflats::catalog {

Graph empty(int n);  // n isolated vertices
Graph complete(int n);
Graph complete_bipartite(int m, int n);
Graph cycle(int n);
Graph path(int n);
Graph star_graph(int leaves);  // K_{1,leaves}
// Cubic graph on n vertices from LCF notation: Hamiltonian cycle plus
// chords i -- i + jumps[i mod |jumps|].
Graph lcf(int n, const std::vector<int>& jumps);

Graph petersen();
Graph heawood();
Graph mcgee();
Graph tutte_coxeter();
Graph desargues_graph();
Graph cube();                // Q3, the c-rank 4, girth 4 example
Graph prism(int n);          // H_n: n-cycles v, w with rungs v_i -- w_i
Graph mobius_ladder(int n);  // tilde H_n: as H_n but v_n -- w_1, w_n -- v_1
Graph coimbra();             // the 7-vertex c-rank 3 example
Graph sober_example();       // 6 vertices; removing vertex 0 keeps Fl
Graph crank3_girth3();       // 10-vertex cubic
Graph crank3_girth4();       // 18-vertex cubic
Graph diameter5_sc3();       // G5: 10 vertices, diameter 5, no potential lines
Graph diameter3_with_lines();  // cubic SC3, diameter 3, with potential lines
Graph vertex_transitive16();

struct Entry {
  std::string name;
  std::string params;  // "" or e.g. "n", "m,n"
  std::string summary;
};
const std::vector<Entry>& entries();

// "petersen", "k:5", "kmn:3,3", "cycle:6", "hn:4", ... Throws
// PreconditionError for unknown names or bad parameters.
Graph by_name(std::string_view spec);

}  // namespace superflats::catalog
