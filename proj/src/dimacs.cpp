#include "avgclique/dimacs.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace avgclique {

namespace {

bool blank(const std::string& s) {
  for (char c : s) {
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<Graph> g;
  std::int64_t declared_edges = 0;
  std::int64_t edge_lines = 0;
  int n = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (g) throw DimacsError(lineno, "duplicate problem line");
      std::string fmt;
      std::int64_t m = 0;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
        throw DimacsError(lineno, "malformed problem line (expected 'p edge <n> <m>')");
      g.emplace(n);
      declared_edges = m;
    } else if (tag == "e") {
      if (!g) throw DimacsError(lineno, "edge before problem line");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) throw DimacsError(lineno, "malformed edge line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw DimacsError(lineno, "vertex out of range (n=" + std::to_string(n) + ")");
      ++edge_lines;
      try {
        g->add_edge(u - 1, v - 1);
      } catch (const std::invalid_argument& e) {
        throw DimacsError(lineno, e.what());
      }
    } else {
      throw DimacsError(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!g) throw DimacsError(lineno, "missing problem line");
  if (edge_lines != declared_edges)
    throw DimacsError(lineno, "edge count mismatch: header declares " + std::to_string(declared_edges) + ", found " +
                                  std::to_string(edge_lines));
  return *g;
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) out << "e " << u + 1 << " " << v + 1 << "\n";
    }
  }
  return out.str();
}

}  // namespace avgclique
