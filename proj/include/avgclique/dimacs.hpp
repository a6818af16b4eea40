#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "avgclique/graph.hpp"

namespace avgclique {

/// Malformed DIMACS input. The message carries the 1-based line number.
class DimacsError : public std::runtime_error {
 public:
  DimacsError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// DIMACS edge format: "c" comments, one "p edge <n> <m>" header, then
/// exactly m lines "e <u> <v>" with 1-based endpoints. Duplicate edge
/// lines are counted against m but collapse in the graph.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

/// Header line, then edges with u < v in lexicographic order, 1-based.
std::string serialize_dimacs(const Graph& g);

}  // namespace avgclique
