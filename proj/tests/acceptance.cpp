// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "avgclique/experiment.hpp"
#include "avgclique/formulas.hpp"
#include "avgclique/maximal_cliques.hpp"
#include "avgclique/solvers.hpp"
#include "test_support.hpp"

using namespace avgclique;
namespace support = avgclique::testing;

namespace {

int failures = 0;
int criterion_index = 0;

void report(const std::string& name, bool pass, const std::string& detail, double seconds) {
  ++criterion_index;
  std::printf("[%s] %2d %-34s %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion_index, name.c_str(), detail.c_str(),
              seconds);
  if (!pass) ++failures;
}

void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    auto [ok, text] = body();
    pass = ok;
    detail = text;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(name, pass, detail, seconds);
}

bool witness_ok(const Graph& g, int k, const DecisionResult& r) {
  if (!r.answer) return !r.witness.has_value();
  return r.witness.has_value() && static_cast<int>(r.witness->size()) == k && is_clique(g, *r.witness);
}

// 1. Every decider equals subset search on every graph with n <= 5.
std::pair<bool, std::string> exhaustive_equivalence() {
  const auto dense = NaturalDistribution::constant(0.5);
  const auto sparse = NaturalDistribution::power_law(1.0);
  long long checked = 0;
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = support::graph_from_mask(n, mask);
      for (int k = 0; k <= n; ++k) {
        const DecisionResult oracle = brute_force_decide(g, k);
        if (!witness_ok(g, k, oracle)) return {false, "invalid oracle witness"};
        for (const DecisionResult& r :
             {algorithm_A(g, k), algorithm_B(g, k), adaptive_decide(g, k, dense), adaptive_decide(g, k, sparse)}) {
          ++checked;
          if (r.answer != oracle.answer || !witness_ok(g, k, r))
            return {false, "disagreement at n=" + std::to_string(n) + " k=" + std::to_string(k)};
        }
      }
    }
  }
  return {true, std::to_string(checked) + " decider runs agree"};
}

// 2. 2000 random instances, zero tolerance.
std::pair<bool, std::string> randomized_equivalence() {
  Rng rng(202, 0, RngDomain::Generic);
  const double ps[] = {0.1, 0.3, 0.5, 0.9};
  for (int i = 0; i < 2000; ++i) {
    const int n = 6 + static_cast<int>(rng.next_below(20));
    const double p = ps[i % 4];
    const Graph g = sample_gnp(NaturalDistribution::constant(p), n, RngSeed{202, static_cast<std::uint64_t>(i)});
    const int k = 2 + static_cast<int>(rng.next_below(5));
    const bool expected = brute_force_decide(g, k).answer;
    const DecisionResult a = algorithm_A(g, k);
    const DecisionResult b = algorithm_B(g, k);
    const DecisionResult dense = adaptive_decide(g, k, NaturalDistribution::constant(p));
    const DecisionResult sparse = adaptive_decide(g, k, NaturalDistribution::power_law(0.7));
    if (a.answer != expected || b.answer != expected || dense.answer != expected || sparse.answer != expected)
      return {false, "disagreement at instance " + std::to_string(i)};
    for (const DecisionResult& r : {a, b, dense, sparse}) {
      if (!witness_ok(g, k, r)) return {false, "invalid witness at instance " + std::to_string(i)};
    }
  }
  return {true, "2000 instances agree"};
}

// 3. Block-miss frequency vs (1 - 0.5^3)^10 at (30, 3, 0.5), 1e5 trials.
std::pair<bool, std::string> block_miss_frequency() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::ElementaryMiss;
  cfg.distribution = NaturalDistribution::constant(0.5);
  cfg.n_grid = {30};
  cfg.k = 3;
  cfg.trials = 100000;
  cfg.seed = 1;
  const RunResult result = run_experiment(cfg);
  long long misses = 0;
  for (const auto& r : result.records) {
    if (!(r.answer && *r.answer)) ++misses;
  }
  const double freq = static_cast<double>(misses) / cfg.trials;
  const double expected = std::pow(0.875, 10);  // = 0.26307557...
  const double sigma = std::sqrt(expected * (1 - expected) / cfg.trials);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "freq=%.5f expected=%.5f tol=%.5f", freq, expected, 3 * sigma);
  return {std::abs(freq - expected) <= 3 * sigma, detail};
}

// 4. Mean K_3 at (20, 0.5) vs C(20,3)/8 = 142.5, 1e4 trials.
std::pair<bool, std::string> census_mean() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::CliqueCensusMean;
  cfg.distribution = NaturalDistribution::constant(0.5);
  cfg.n_grid = {20};
  cfg.k = 3;
  cfg.trials = 10000;
  cfg.seed = 2;
  const RunResult result = run_experiment(cfg);
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& r : result.records) {
    const double v = static_cast<double>(r.ks_count.value_or(0));
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / cfg.trials;
  const double variance = (sum_sq - sum * sum / cfg.trials) / (cfg.trials - 1);
  const double se = std::sqrt(variance / cfg.trials);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "mean=%.3f expected=142.5 tol=%.3f", mean, 3 * se);
  return {std::abs(mean - 142.5) <= 3 * se, detail};
}

// 5. The two enumerators emit identical families; octahedron has 8.
std::pair<bool, std::string> enumerator_cross_validation() {
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = support::graph_from_mask(n, mask);
      VertexIncrementalStream incremental(g);
      PivotBacktrackingStream pivot(g);
      const auto a = support::sorted_family(collect_all(incremental));
      const auto b = support::sorted_family(collect_all(pivot));
      if (a != b || a != support::maximal_by_subsets(g))
        return {false, "family mismatch on an n<=5 graph"};
    }
  }
  Rng rng(505, 0, RngDomain::Generic);
  const double ps[] = {0.2, 0.5, 0.8};
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng.next_below(30));
    const Graph g = support::random_graph(n, ps[i % 3], rng);
    VertexIncrementalStream incremental(g);
    PivotBacktrackingStream pivot(g);
    if (support::sorted_family(collect_all(incremental)) != support::sorted_family(collect_all(pivot)))
      return {false, "family mismatch at random graph " + std::to_string(i)};
  }
  const Graph octahedron = support::octahedron();
  VertexIncrementalStream oct(octahedron);
  if (collect_all(oct).size() != 8) return {false, "octahedron must have 8 maximal cliques"};
  return {true, "exhaustive n<=5, 1000 random graphs, octahedron=8"};
}

// 6. Empirical upper tail of K_3 never beats the dependency bound.
std::pair<bool, std::string> tail_bound_soundness() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::TailFrequency;
  cfg.distribution = NaturalDistribution::power_law(0.7);  // p = 20^{-0.7}
  cfg.n_grid = {20};
  cfg.k = 3;
  cfg.trials = 10000;
  cfg.seed = 3;
  cfg.t_grid = {1, 2, 4, 8, 16};
  const RunResult result = run_experiment(cfg);
  const double p = cfg.distribution.eval_p(20);
  const double mu = expected_clique_count(20, p, 3).mu;
  const double delta = 2.0 * 3 * 3 * 20.0;  // 2 s^2 n^{s-2}
  int violations = 0;
  for (double t : cfg.t_grid) {
    long long over = 0;
    for (const auto& r : result.records) {
      if (static_cast<double>(r.ks_count.value_or(0)) >= mu + t) ++over;
    }
    const double freq = static_cast<double>(over) / cfg.trials;
    const double bound = jr_tail_bound(mu, t, delta);
    const double se = std::sqrt(freq * (1 - freq) / cfg.trials);
    if (freq > bound + 3 * se) ++violations;
  }
  return {violations == 0, violations == 0 ? "0 violations over 5 t values" : "bound violated"};
}

// 7. Clique-count proxy never exceeds n^{s1} + log2 n on the sparse model.
std::pair<bool, std::string> typfpt_zero_exceedance() {
  for (int n : {30, 60}) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::TypFptDiagnostic;
    cfg.distribution = NaturalDistribution::power_law(1.0);
    cfg.n_grid = {n};
    cfg.k = 3;
    cfg.trials = 10000;
    cfg.seed = 4;
    const RunResult result = run_experiment(cfg);
    const double fraction = result.summary.at("per_n").at(0).at("exceedance_fraction").get<double>();
    if (fraction != 0.0) return {false, "exceedance at n=" + std::to_string(n)};
  }
  return {true, "0 exceedances in 2x10^4 trials (s1=25)"};
}

// 8. E[cost]/n^2 of the block-scan decider is non-increasing over the grid.
std::pair<bool, std::string> avgfpt_trend() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::AvgFptDiagnostic;
  cfg.distribution = NaturalDistribution::constant(0.5);
  cfg.solver = SolverKind::AlgorithmA;
  cfg.n_grid = {20, 40, 80, 160};
  cfg.k = 3;
  cfg.trials = 1000;
  cfg.seed = 5;
  cfg.normalization_exponent = 2;
  const RunResult result = run_experiment(cfg);
  const AvgFptTrend trend = avgfpt_diagnostic(result.records, 2, cfg.n_grid);
  std::string values;
  for (const auto& point : trend.points) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f ", point.normalized_mean);
    values += buffer;
  }
  return {trend.non_increasing, "E[cost]/n^2 = " + values};
}

// 9. Threshold formulas at their pinned values.
std::pair<bool, std::string> threshold_values() {
  const auto dep = dependency_degree_bound(10, 3);
  const bool ok = s0_threshold(1.0) == 9 && s1_threshold(1.0) == 25 && dep.exact == 22.0 && dep.bound == 180.0 &&
                  support::overlap_count_by_enumeration(10, 3) == 22;
  return {ok, "s0(1)=9 s1(1)=25 delta(10,3)=(22,180)"};
}

// 10. Rerunning a config yields byte-identical trial records.
std::pair<bool, std::string> reproducibility() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::SolverCost;
  cfg.distribution = NaturalDistribution::constant(0.5);
  cfg.solver = SolverKind::Adaptive;
  cfg.n_grid = {12, 18};
  cfg.k = 3;
  cfg.trials = 500;
  cfg.seed = 6;
  const std::string csv1 = records_to_csv(run_experiment(cfg, 4).records);
  const std::string csv2 = records_to_csv(run_experiment(cfg, 2).records);
  return {csv1 == csv2 && !csv1.empty(),
          csv1 == csv2 ? "identical CSV bytes across reruns" : "CSV bytes differ"};
}

}  // namespace

int main() {
  run("exhaustive oracle equivalence", exhaustive_equivalence);
  run("randomized oracle equivalence", randomized_equivalence);
  run("block-miss exact formula", block_miss_frequency);
  run("expected clique count", census_mean);
  run("enumerator cross-validation", enumerator_cross_validation);
  run("upper-tail bound soundness", tail_bound_soundness);
  run("typFPT zero exceedance", typfpt_zero_exceedance);
  run("avgFPT cost trend", avgfpt_trend);
  run("threshold formulas", threshold_values);
  run("experiment reproducibility", reproducibility);
  std::printf("%d/%d criteria passed\n", criterion_index - failures, criterion_index);
  return failures;
}
