#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "avgclique/gnp.hpp"
#include "avgclique/graph.hpp"
#include "avgclique/rng.hpp"

namespace avgclique {

enum class SolverPath { ElementaryHit, BruteForceFallback, MaximalEnumeration, BruteForceDirect, GreedyHeuristic };

const char* to_string(SolverPath path);
SolverPath solver_path_from_string(const std::string& s);

/// Outcome of a k-clique decision. `cost` counts adjacency queries and is
/// the deterministic runtime proxy; wall_time is informational only and
/// never asserted.
struct DecisionResult {
  bool answer = false;
  std::optional<VertexSet> witness;  // present iff answer, |witness| = k
  std::uint64_t cost = 0;
  SolverPath path = SolverPath::BruteForceDirect;
  std::chrono::duration<double> wall_time{0};
  /// Dense-dispatch diagnostic: k <= min(n^{1/4}, g(n)^{-1/4}). Set only
  /// when a distribution is attached to the run.
  std::optional<bool> lemma1_hypothesis;

  nlohmann::ordered_json to_json(bool include_timing = false) const;
};

/// Lexicographic subset search with prefix pruning; the witness is the
/// lexicographically smallest k-clique. k > n answers no; k <= 1 answers
/// yes (witness {0} for k = 1 when n >= 1, empty set for k = 0).
DecisionResult brute_force_decide(const Graph& g, int k);

/// Scans the floor(n/k) aligned blocks {jk,...,(j+1)k-1} and returns the
/// smallest j whose block is a clique. Pair checks within a block stop at
/// the first missing edge; `cost`, when given, accumulates the number of
/// pair checks. Requires 2 <= k <= n.
std::optional<int> elementary_clique_scan(const Graph& g, int k, std::uint64_t* cost = nullptr);

/// Block scan first, full subset search only on a miss. Intended for
/// dense inputs, correct on all inputs.
DecisionResult algorithm_A(const Graph& g, int k);

struct AlgorithmBOptions {
  /// Stop enumerating once a maximal clique of size >= k is seen. The
  /// experiment harness disables this to measure full-enumeration cost.
  bool short_circuit = true;
};

/// Decides via maximal-clique enumeration. Intended for sparse inputs,
/// correct on all inputs. The witness is the first k vertices of the
/// first maximal clique of size >= k in emission order.
DecisionResult algorithm_B(const Graph& g, int k, AlgorithmBOptions options = {});

/// Dispatches on the distribution's limit exponent: 0 selects the block
/// scan (dense case), positive selects maximal-clique enumeration, and
/// the all-zero preset is handled as sparse (still decided by
/// enumeration, never assumed edgeless).
DecisionResult adaptive_decide(const Graph& g, int k, const NaturalDistribution& dist);

/// k <= min(n^{1/4}, g(n)^{-1/4}), the regime where the block scan almost
/// surely hits. Nullopt when the distribution has no exponent or n < 2.
std::optional<bool> lemma1_scan_hypothesis(const NaturalDistribution& dist, int n, int k);

/// Maximal clique grown from `start` by repeatedly admitting the
/// smallest-index vertex adjacent to every current member.
VertexSet greedy_clique(const Graph& g, Vertex start, std::uint64_t* cost = nullptr);

struct RepeatedGreedyResult {
  bool found = false;  // best clique reached size k
  VertexSet best;
  std::uint64_t cost = 0;
};

/// Greedy restarts from random start vertices with randomly permuted
/// candidate orders; deterministic given the seed. Returns the largest
/// clique seen across all restarts.
RepeatedGreedyResult repeated_greedy(const Graph& g, int k, int restarts, RngSeed seed);

}  // namespace avgclique
