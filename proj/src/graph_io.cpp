#include "superflats/graph_io.hpp"

#include <sstream>

#include "superflats/errors.hpp"

namespace superflats {

Graph parse_edge_list(std::string_view text) {
  std::string cleaned;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    cleaned += line;
    cleaned += '\n';
  }
  std::istringstream in(cleaned);
  long long n = 0;
  if (!(in >> n)) throw ParseError("edge list: missing vertex count");
  if (n < 0) throw ParseError("edge list: negative vertex count");
  if (n > kMaxVertices) throw CapacityError("edge list: " + std::to_string(n) + " vertices; capacity is 64");
  Graph g(static_cast<int>(n));
  long long u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw ParseError("edge list: dangling vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: edge " + std::to_string(u) + " " + std::to_string(v) +
                       " out of range");
    }
    if (u == v) throw ParseError("edge list: loop at " + std::to_string(u));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!in.eof()) throw ParseError("edge list: non-numeric token");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  }
  if (text.empty()) throw ParseError("graph6: empty string");
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 4 && text[1] != 126) {
    n = (static_cast<long long>(text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  } else {
    throw ParseError("graph6: graphs this large are not supported");
  }
  if (n > kMaxVertices) throw CapacityError("graph6: " + std::to_string(n) + " vertices; capacity is 64");
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }
  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  }
  if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (!g.labels().empty()) out += " [label=\"" + g.label(v) + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace superflats
