#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avgclique/bitset.hpp"

namespace avgclique {

using Vertex = int;

/// Sorted, duplicate-free vertex list. Producers keep the invariant;
/// is_clique() asserts it in debug builds.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
/// Construction is single-threaded; once built the graph is treated as
/// immutable and is safe to share across concurrent readers.
class Graph {
 public:
  explicit Graph(int n) : n_(n), m_(0), rows_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  /// Duplicate edges collapse; self-loops and out-of-range endpoints throw.
  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("graph: endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") with n=" + std::to_string(n_));
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v))) return;
    rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    ++m_;
  }

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }

  const Bitset& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  int degree(int v) const { return static_cast<int>(rows_[static_cast<std::size_t>(v)].count()); }

  Graph complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (!adjacent(u, v)) g.add_edge(u, v);
      }
    }
    return g;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_;
  std::int64_t m_;
  std::vector<Bitset> rows_;
};

/// Number of cliques per size. counts[1] = n; total excludes singletons.
struct CliqueCensus {
  std::map<int, std::uint64_t> counts;
  std::uint64_t total = 0;  // sum over sizes >= 2

  std::uint64_t at(int s) const {
    auto it = counts.find(s);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Adjacency-query tally shared by the instrumented algorithms. Word-wise
/// set operations charge one query per vertex position they evaluate.
struct CostCounter {
  std::uint64_t queries = 0;
};

/// True iff every pair in S is adjacent; |S| <= 1 counts as a clique.
bool is_clique(const Graph& g, const VertexSet& s);

/// Exact K_s(G) for every s, by depth-first extension over vertices in
/// increasing order (each clique visited exactly once). Exponential in
/// the clique structure; callers bound n.
CliqueCensus count_cliques_by_size(const Graph& g, CostCounter* cost = nullptr);

/// Largest s with K_s(G) > 0; 0 for the empty graph. Branch-and-bound
/// over increasing-order extensions.
int max_clique_size_bruteforce(const Graph& g);

}  // namespace avgclique
