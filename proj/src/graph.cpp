#include "avgclique/graph.hpp"

#include <algorithm>
#include <cassert>

namespace avgclique {

bool is_clique(const Graph& g, const VertexSet& s) {
  assert(std::is_sorted(s.begin(), s.end()));
  assert(std::adjacent_find(s.begin(), s.end()) == s.end());
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("is_clique: vertex out of range");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

namespace {

void census_dfs(const Graph& g, const Bitset& candidates, int depth, CliqueCensus& census, CostCounter* cost) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (std::size_t v = candidates.next(0); v != Bitset::npos; v = candidates.next(v + 1)) {
    census.counts[depth + 1] += 1;
    Bitset next = candidates;
    next &= g.neighbors(static_cast<int>(v));
    if (cost) cost->queries += n;
    next.clear_below(v + 1);
    if (next.any()) census_dfs(g, next, depth + 1, census, cost);
  }
}

int max_clique_dfs(const Graph& g, const Bitset& candidates, int depth, int best) {
  int remaining = static_cast<int>(candidates.count());
  for (std::size_t v = candidates.next(0); v != Bitset::npos; v = candidates.next(v + 1), --remaining) {
    if (depth + remaining <= best) break;  // not enough room left
    best = std::max(best, depth + 1);
    Bitset next = candidates;
    next &= g.neighbors(static_cast<int>(v));
    next.clear_below(v + 1);
    if (next.any() && depth + 1 + static_cast<int>(next.count()) > best)
      best = max_clique_dfs(g, next, depth + 1, best);
  }
  return best;
}

}  // namespace

CliqueCensus count_cliques_by_size(const Graph& g, CostCounter* cost) {
  CliqueCensus census;
  const int n = g.vertex_count();
  if (n > 0) census.counts[1] = static_cast<std::uint64_t>(n);
  for (int v = 0; v < n; ++v) {
    Bitset cand = g.neighbors(v);
    cand.clear_below(static_cast<std::size_t>(v) + 1);
    if (cost) cost->queries += static_cast<std::size_t>(n);
    if (cand.any()) census_dfs(g, cand, 1, census, cost);
  }
  census.total = 0;
  for (const auto& [s, c] : census.counts) {
    if (s >= 2) census.total += c;
  }
  return census;
}

int max_clique_size_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int best = 1;
  for (int v = 0; v < n; ++v) {
    Bitset cand = g.neighbors(v);
    cand.clear_below(static_cast<std::size_t>(v) + 1);
    if (1 + static_cast<int>(cand.count()) <= best) continue;
    if (cand.any()) best = max_clique_dfs(g, cand, 1, best);
  }
  return best;
}

}  // namespace avgclique
