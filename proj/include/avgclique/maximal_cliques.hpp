#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "avgclique/graph.hpp"

namespace avgclique {

/// Pull-based enumeration of the maximal cliques of an immutable graph.
/// Each clique is emitted exactly once, in an order that is deterministic
/// for a given graph; consumers may stop early. The graph must outlive
/// the stream. A stream is single-consumer; independent streams over the
/// same graph may run concurrently.
class MaximalCliqueStream {
 public:
  virtual ~MaximalCliqueStream() = default;

  /// Next maximal clique as a sorted vertex list, or nullopt when done.
  virtual std::optional<VertexSet> next() = 0;

  std::uint64_t emitted() const { return emitted_; }
  std::uint64_t cost() const { return cost_.queries; }

 protected:
  explicit MaximalCliqueStream(const Graph& g) : g_(&g) {}
  VertexSet to_vertex_set(const Bitset& members) {
    VertexSet out;
    members.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
    ++emitted_;
    return out;
  }
  const Graph* g_;
  std::uint64_t emitted_ = 0;
  CostCounter cost_;
};

/// Reverse-search enumeration over the parent tree rooted at the
/// lexicographically first maximal clique: a candidate child is accepted
/// only if its canonical anchor vertex and canonical parent match the
/// generating pair, so no duplicate bookkeeping is needed. Emission order
/// is depth-first from the root; total work stays within a polynomial
/// factor of n^3 per emitted clique.
class VertexIncrementalStream final : public MaximalCliqueStream {
 public:
  explicit VertexIncrementalStream(const Graph& g);
  explicit VertexIncrementalStream(Graph&&) = delete;  // stream must not outlive the graph
  std::optional<VertexSet> next() override;

 private:
  struct Frame {
    Bitset clique;
    int next_candidate = 0;
  };
  Bitset lex_complete(Bitset members);
  bool anchored_at(const Bitset& clique, int anchor);
  std::vector<Frame> stack_;
  bool started_ = false;
};

/// Backtracking enumeration with pivot selection (independent of the
/// reverse-search algorithm above; the two cross-validate each other).
class PivotBacktrackingStream final : public MaximalCliqueStream {
 public:
  explicit PivotBacktrackingStream(const Graph& g);
  explicit PivotBacktrackingStream(Graph&&) = delete;
  std::optional<VertexSet> next() override;

 private:
  struct Frame {
    Bitset included, candidates, excluded;
    std::vector<int> branch;  // candidates outside the pivot's neighborhood
    std::size_t next_branch = 0;
  };
  Frame make_frame(Bitset included, Bitset candidates, Bitset excluded);
  std::vector<Frame> stack_;
  bool started_ = false;
};

inline VertexIncrementalStream enumerate_vertex_incremental(const Graph& g) {
  return VertexIncrementalStream(g);
}
VertexIncrementalStream enumerate_vertex_incremental(Graph&&) = delete;
inline PivotBacktrackingStream enumerate_pivot_backtracking(const Graph& g) {
  return PivotBacktrackingStream(g);
}
PivotBacktrackingStream enumerate_pivot_backtracking(Graph&&) = delete;

/// MK(G), by draining an enumeration stream.
std::uint64_t count_maximal_cliques(const Graph& g);

/// Drains a stream into a list (test and CLI convenience).
std::vector<VertexSet> collect_all(MaximalCliqueStream& stream);

}  // namespace avgclique
