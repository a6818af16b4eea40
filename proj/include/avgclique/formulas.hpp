#pragma once

#include <optional>

namespace avgclique {

/// A probability together with its natural logarithm, for values that
/// underflow double range.
struct ProbValue {
  double value = 0.0;
  double log_value = 0.0;
};

/// Probability that none of the floor(n/k) aligned vertex blocks of size k
/// forms a clique in G(n,p): (1 - p^C(k,2))^floor(n/k), evaluated in
/// log space. Requires 2 <= k <= n and p in [0,1].
ProbValue prob_no_elementary_clique_exact(int n, int k, double p);

struct BlockMissBound {
  double value = 0.0;
  double log_value = 0.0;
  /// k <= min(n^{1/4}, g_n^{-1/4}); outside this range the bound is still
  /// evaluated but only descriptive.
  bool hypothesis_ok = true;
};

/// Closed-form upper bound exp(-n^{1 - g_n * C(k,2)} / (2k)) on the
/// block-miss probability, for p = n^{-g_n}.
BlockMissBound lemma1_bound(int n, int k, double g_n);

struct ExpectedCliqueCount {
  double mu = 0.0;      // C(n,s) * p^C(s,2)
  double log_mu = 0.0;  // natural log
  std::optional<double> exponent_bound;      // n^{s - g*C(s,2)} when g supplied
  std::optional<double> exponent_bound_log;
};

/// Expected number of s-cliques in G(n,p). Requires 2 <= s <= n.
ExpectedCliqueCount expected_clique_count(int n, double p, int s, std::optional<double> g_n = std::nullopt);

/// Size above which expected s-clique counts drop below n^{-3}:
/// 2*ceil(4/c_g) + 1. Requires c_g > 0.
int s0_threshold(double c_g);

/// Size above which the clique-count tail is logarithmic w.h.p.:
/// max(ceil(25/c_g), 3). Requires c_g > 0.
int s1_threshold(double c_g);

struct DependencyDegree {
  /// Number of s-subsets sharing >= 2 vertices with a fixed s-subset
  /// (the fixed subset included); 0 when s = n.
  double exact = 0.0;
  /// 2 * s^2 * n^{s-2}; dominates `exact` only for s <= n/2.
  double bound = 0.0;
  bool s_above_half_n = false;
};

/// Exact and closed-form dependency counts for the s-clique indicator
/// family. Requires 2 <= s <= n.
DependencyDegree dependency_degree_bound(int n, int s);

/// Upper-tail bound (1 + t/mu)^{-t/(4*delta)} for sums of dependent
/// indicators. Requires mu > 0, t >= 0, delta >= 1.
double jr_tail_bound(double mu, double t, double delta);

/// Exact C(n,k) in double precision while representable; grows through
/// the integral recurrence so small values are exact.
double choose_double(int n, int k);

/// log C(n,k).
double log_choose(int n, int k);

}  // namespace avgclique
