#include "avgclique/maximal_cliques.hpp"

namespace avgclique {

// ---------------------------------------------------------------------
// Reverse search

VertexIncrementalStream::VertexIncrementalStream(const Graph& g) : MaximalCliqueStream(g) {}

/// Greedy completion: scan vertices in increasing order and absorb every
/// vertex adjacent to the whole current set. Yields the lexicographically
/// smallest maximal clique containing the seed.
Bitset VertexIncrementalStream::lex_complete(Bitset members) {
  const int n = g_->vertex_count();
  std::uint64_t size = members.count();
  for (int v = 0; v < n; ++v) {
    if (members.test(static_cast<std::size_t>(v))) continue;
    cost_.queries += size;
    if (members.is_subset_of(g_->neighbors(v))) {
      members.set(static_cast<std::size_t>(v));
      ++size;
    }
  }
  return members;
}

/// True iff `anchor` is the smallest vertex whose clique prefix
/// completes back to the clique itself.
bool VertexIncrementalStream::anchored_at(const Bitset& clique, int anchor) {
  Bitset prefix(clique.capacity());
  for (std::size_t j = clique.next(0); j != Bitset::npos; j = clique.next(j + 1)) {
    if (static_cast<int>(j) > anchor) return false;
    prefix.set(j);
    if (lex_complete(prefix) == clique) return static_cast<int>(j) == anchor;
  }
  return false;
}

std::optional<VertexSet> VertexIncrementalStream::next() {
  const int n = g_->vertex_count();
  if (!started_) {
    started_ = true;
    if (n == 0) return std::nullopt;
    Bitset root = lex_complete(Bitset(static_cast<std::size_t>(n)));
    stack_.push_back({root, 0});
    return to_vertex_set(root);
  }
  while (!stack_.empty()) {
    const std::size_t fi = stack_.size() - 1;
    if (stack_[fi].next_candidate >= n) {
      stack_.pop_back();
      continue;
    }
    const int i = stack_[fi].next_candidate++;
    if (stack_[fi].clique.test(static_cast<std::size_t>(i))) continue;
    Bitset seed = stack_[fi].clique;
    seed.clear_from(static_cast<std::size_t>(i));
    seed &= g_->neighbors(i);
    cost_.queries += static_cast<std::uint64_t>(n);
    seed.set(static_cast<std::size_t>(i));
    Bitset child = lex_complete(std::move(seed));
    if (!anchored_at(child, i)) continue;
    Bitset parent_prefix = child;
    parent_prefix.clear_from(static_cast<std::size_t>(i));
    if (!(lex_complete(std::move(parent_prefix)) == stack_[fi].clique)) continue;
    stack_.push_back({child, 0});
    return to_vertex_set(child);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Pivot backtracking

PivotBacktrackingStream::PivotBacktrackingStream(const Graph& g) : MaximalCliqueStream(g) {}

PivotBacktrackingStream::Frame PivotBacktrackingStream::make_frame(Bitset included, Bitset candidates,
                                                                   Bitset excluded) {
  const auto n = static_cast<std::uint64_t>(g_->vertex_count());
  Frame f{std::move(included), std::move(candidates), std::move(excluded), {}, 0};
  // Pivot: vertex of candidates+excluded covering the most candidates,
  // smallest index on ties.
  int pivot = -1;
  std::uint64_t best_cover = 0;
  auto consider = [&](std::size_t u) {
    Bitset covered = f.candidates;
    covered &= g_->neighbors(static_cast<int>(u));
    cost_.queries += n;
    const std::uint64_t c = covered.count();
    if (pivot < 0 || c > best_cover) {
      pivot = static_cast<int>(u);
      best_cover = c;
    }
  };
  f.candidates.for_each(consider);
  f.excluded.for_each(consider);
  Bitset branch = f.candidates;
  if (pivot >= 0) {
    branch.and_not(g_->neighbors(pivot));
    cost_.queries += n;
  }
  branch.for_each([&](std::size_t v) { f.branch.push_back(static_cast<int>(v)); });
  return f;
}

std::optional<VertexSet> PivotBacktrackingStream::next() {
  const int n = g_->vertex_count();
  if (!started_) {
    started_ = true;
    if (n == 0) return std::nullopt;
    Bitset all(static_cast<std::size_t>(n));
    all.set_first(static_cast<std::size_t>(n));
    stack_.push_back(make_frame(Bitset(static_cast<std::size_t>(n)), std::move(all),
                                Bitset(static_cast<std::size_t>(n))));
  }
  while (!stack_.empty()) {
    const std::size_t fi = stack_.size() - 1;
    if (stack_[fi].next_branch >= stack_[fi].branch.size()) {
      stack_.pop_back();
      continue;
    }
    const int v = stack_[fi].branch[stack_[fi].next_branch++];
    Bitset included = stack_[fi].included;
    included.set(static_cast<std::size_t>(v));
    Bitset candidates = stack_[fi].candidates;
    candidates &= g_->neighbors(v);
    Bitset excluded = stack_[fi].excluded;
    excluded &= g_->neighbors(v);
    cost_.queries += 2 * static_cast<std::uint64_t>(n);
    stack_[fi].candidates.reset(static_cast<std::size_t>(v));
    stack_[fi].excluded.set(static_cast<std::size_t>(v));
    if (candidates.none() && excluded.none()) return to_vertex_set(included);
    if (candidates.any()) {
      stack_.push_back(make_frame(std::move(included), std::move(candidates), std::move(excluded)));
    }
    // candidates empty but excluded nonempty: dead branch, nothing maximal here
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------

std::uint64_t count_maximal_cliques(const Graph& g) {
  PivotBacktrackingStream stream(g);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

std::vector<VertexSet> collect_all(MaximalCliqueStream& stream) {
  std::vector<VertexSet> out;
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace avgclique
