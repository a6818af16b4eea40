#include "avgclique/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "avgclique/maximal_cliques.hpp"

namespace avgclique {

const char* to_string(SolverPath path) {
  switch (path) {
    case SolverPath::ElementaryHit:
      return "ElementaryHit";
    case SolverPath::BruteForceFallback:
      return "BruteForceFallback";
    case SolverPath::MaximalEnumeration:
      return "MaximalEnumeration";
    case SolverPath::BruteForceDirect:
      return "BruteForceDirect";
    case SolverPath::GreedyHeuristic:
      return "GreedyHeuristic";
  }
  return "?";
}

SolverPath solver_path_from_string(const std::string& s) {
  for (SolverPath p : {SolverPath::ElementaryHit, SolverPath::BruteForceFallback, SolverPath::MaximalEnumeration,
                       SolverPath::BruteForceDirect, SolverPath::GreedyHeuristic}) {
    if (s == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown solver path '" + s + "'");
}

nlohmann::ordered_json DecisionResult::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["answer"] = answer;
  if (witness)
    j["witness"] = *witness;
  else
    j["witness"] = nullptr;
  j["cost"] = cost;
  j["path"] = to_string(path);
  if (lemma1_hypothesis)
    j["satisfied_lemma1_hypothesis"] = *lemma1_hypothesis;
  else
    j["satisfied_lemma1_hypothesis"] = nullptr;
  if (include_timing) j["wall_time_ms"] = wall_time.count() * 1e3;
  return j;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::chrono::duration<double> elapsed() const { return std::chrono::steady_clock::now() - start; }
};

/// Trivial boundary answers shared by all deciders: k > n is a definite
/// no, k <= 1 a definite yes.
std::optional<DecisionResult> trivial_decision(const Graph& g, int k, SolverPath path) {
  if (k < 0) throw std::domain_error("k must be non-negative");
  DecisionResult r;
  r.path = path;
  if (k > g.vertex_count()) return r;
  if (k <= 1) {
    r.answer = true;
    VertexSet witness;
    if (k == 1) witness.push_back(0);
    r.witness = std::move(witness);
    return r;
  }
  return std::nullopt;
}

bool subsets_dfs(const Graph& g, int k, Vertex from, VertexSet& prefix, std::uint64_t& cost) {
  if (static_cast<int>(prefix.size()) == k) return true;
  const int n = g.vertex_count();
  const int needed = k - static_cast<int>(prefix.size());
  for (Vertex v = from; v <= n - needed; ++v) {
    bool extends = true;
    for (Vertex u : prefix) {
      ++cost;
      if (!g.adjacent(u, v)) {
        extends = false;
        break;
      }
    }
    if (!extends) continue;
    prefix.push_back(v);
    if (subsets_dfs(g, k, v + 1, prefix, cost)) return true;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

DecisionResult brute_force_decide(const Graph& g, int k) {
  Timer timer;
  if (auto trivial = trivial_decision(g, k, SolverPath::BruteForceDirect)) {
    trivial->wall_time = timer.elapsed();
    return *trivial;
  }
  DecisionResult r;
  r.path = SolverPath::BruteForceDirect;
  VertexSet prefix;
  prefix.reserve(static_cast<std::size_t>(k));
  r.answer = subsets_dfs(g, k, 0, prefix, r.cost);
  if (r.answer) r.witness = prefix;
  r.wall_time = timer.elapsed();
  return r;
}

std::optional<int> elementary_clique_scan(const Graph& g, int k, std::uint64_t* cost) {
  const int n = g.vertex_count();
  if (k < 2 || k > n) throw std::domain_error("elementary_clique_scan requires 2 <= k <= n");
  const int blocks = n / k;
  for (int j = 0; j < blocks; ++j) {
    const int base = j * k;
    bool complete = true;
    for (int a = 0; a < k && complete; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (cost) ++*cost;
        if (!g.adjacent(base + a, base + b)) {
          complete = false;
          break;
        }
      }
    }
    if (complete) return j;
  }
  return std::nullopt;
}

DecisionResult algorithm_A(const Graph& g, int k) {
  Timer timer;
  if (auto trivial = trivial_decision(g, k, SolverPath::BruteForceFallback)) {
    trivial->wall_time = timer.elapsed();
    return *trivial;
  }
  DecisionResult r;
  if (auto block = elementary_clique_scan(g, k, &r.cost)) {
    r.answer = true;
    r.path = SolverPath::ElementaryHit;
    VertexSet witness(static_cast<std::size_t>(k));
    std::iota(witness.begin(), witness.end(), *block * k);
    r.witness = std::move(witness);
  } else {
    DecisionResult fallback = brute_force_decide(g, k);
    r.answer = fallback.answer;
    r.witness = std::move(fallback.witness);
    r.cost += fallback.cost;
    r.path = SolverPath::BruteForceFallback;
  }
  r.wall_time = timer.elapsed();
  return r;
}

DecisionResult algorithm_B(const Graph& g, int k, AlgorithmBOptions options) {
  Timer timer;
  if (auto trivial = trivial_decision(g, k, SolverPath::MaximalEnumeration)) {
    trivial->wall_time = timer.elapsed();
    return *trivial;
  }
  DecisionResult r;
  r.path = SolverPath::MaximalEnumeration;
  VertexIncrementalStream stream(g);
  while (auto clique = stream.next()) {
    if (!r.answer && static_cast<int>(clique->size()) >= k) {
      r.answer = true;
      r.witness = VertexSet(clique->begin(), clique->begin() + k);
      if (options.short_circuit) break;
    }
  }
  r.cost = stream.cost();
  r.wall_time = timer.elapsed();
  return r;
}

std::optional<bool> lemma1_scan_hypothesis(const NaturalDistribution& dist, int n, int k) {
  if (n < 2 || dist.kind() == NaturalDistribution::Kind::Zero) return std::nullopt;
  const double g_n = dist.exponent(n);
  const double cap_n = std::pow(static_cast<double>(n), 0.25);
  const double cap_g = g_n > 0.0 ? std::pow(g_n, -0.25) : std::numeric_limits<double>::infinity();
  return static_cast<double>(k) <= std::min(cap_n, cap_g);
}

DecisionResult adaptive_decide(const Graph& g, int k, const NaturalDistribution& dist) {
  const auto c_g = dist.limit_exponent();
  if (!c_g || *c_g > 0.0) return algorithm_B(g, k);

  DecisionResult r = algorithm_A(g, k);
  r.lemma1_hypothesis = lemma1_scan_hypothesis(dist, g.vertex_count(), k);
  return r;
}

namespace {

/// One greedy pass over `order`, starting from `start`. A vertex rejected
/// once can never become admissible again, so a single pass reaches a
/// maximal clique.
VertexSet greedy_pass(const Graph& g, Vertex start, const std::vector<Vertex>& order, std::uint64_t& cost) {
  VertexSet clique{start};
  for (Vertex v : order) {
    if (v == start) continue;
    bool admissible = true;
    for (Vertex u : clique) {
      ++cost;
      if (!g.adjacent(u, v)) {
        admissible = false;
        break;
      }
    }
    if (admissible) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace

VertexSet greedy_clique(const Graph& g, Vertex start, std::uint64_t* cost) {
  if (start < 0 || start >= g.vertex_count()) throw std::domain_error("greedy_clique: start vertex out of range");
  std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t local = 0;
  VertexSet result = greedy_pass(g, start, order, local);
  if (cost) *cost += local;
  return result;
}

RepeatedGreedyResult repeated_greedy(const Graph& g, int k, int restarts, RngSeed seed) {
  if (restarts < 1) throw std::domain_error("repeated_greedy requires restarts >= 1");
  RepeatedGreedyResult r;
  const int n = g.vertex_count();
  if (n == 0) {
    r.found = k <= 0;
    return r;
  }
  Rng rng(seed, RngDomain::GreedyRestarts, static_cast<std::uint64_t>(n));
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int t = 0; t < restarts; ++t) {
    const auto start = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.next_below(i)]);
    }
    VertexSet clique = greedy_pass(g, start, order, r.cost);
    if (clique.size() > r.best.size()) r.best = std::move(clique);
  }
  r.found = static_cast<int>(r.best.size()) >= k;
  return r;
}

}  // namespace avgclique
