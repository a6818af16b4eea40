#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "avgclique/gnp.hpp"
#include "avgclique/graph.hpp"
#include "avgclique/solvers.hpp"

namespace avgclique {

enum class ExperimentKind {
  ElementaryMiss,     // frequency of "no aligned block is a clique" vs closed form
  CliqueCensusMean,   // empirical mean of K_s vs C(n,s) p^C(s,2)
  TailFrequency,      // empirical Pr[K_s >= mu + t] vs the dependency tail bound
  SolverCost,         // cost/answer/path statistics for one decider
  AvgFptDiagnostic,   // E[cost]/n^c across an n-grid
  TypFptDiagnostic,   // threshold-exceedance fractions across an n-grid
  GreedyGap,          // greedy vs repeated-greedy vs exact maximum clique size
};

enum class SolverKind { Brute, AlgorithmA, AlgorithmB, Adaptive, Greedy };

const char* to_string(ExperimentKind kind);
const char* to_string(SolverKind kind);
ExperimentKind experiment_kind_from_string(const std::string& s);
SolverKind solver_kind_from_string(const std::string& s);

struct ThresholdSpec {
  enum class Kind {
    S1CliqueCount,  // total clique count vs n^{s1} + log2(n), s1 from c_g
    CostPower,      // cost vs coeff * n^exponent
  };
  Kind kind = Kind::S1CliqueCount;
  double coeff = 1.0;
  double exponent = 0.0;
};

/// Declarative Monte-Carlo experiment. `k` doubles as the census size s
/// for the census/tail kinds ("s" is accepted as a JSON alias).
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::SolverCost;
  NaturalDistribution distribution = NaturalDistribution::constant(0.5);
  std::vector<int> n_grid;
  int k = 3;
  int trials = 1;
  std::uint64_t seed = 1;
  SolverKind solver = SolverKind::Adaptive;
  std::optional<int> normalization_exponent;  // c in E[cost]/n^c
  std::vector<double> t_grid = {1, 2, 4, 8, 16};
  ThresholdSpec threshold;
  int restarts = 50;  // greedy restarts (GreedyGap and the greedy solver)
  bool disable_short_circuit = false;
  double sigma_multiple = 3.0;

  void validate() const;
  nlohmann::ordered_json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

/// One trial's measurements. Every field is reproducible bit-for-bit from
/// the config: trial t of grid point n uses substream id t.
struct TrialRecord {
  int n = 0;
  int k = 0;
  int trial = 0;
  std::uint64_t stream = 0;
  std::uint64_t cost = 0;
  std::optional<bool> answer;
  std::optional<SolverPath> path;
  std::optional<bool> lemma1_hyp;
  std::optional<std::uint64_t> ks_count;
  std::optional<std::uint64_t> total_cliques;
  std::optional<std::uint64_t> tail_sum;
  std::optional<int> greedy_size;
  std::optional<int> repeated_size;
  std::optional<int> max_size;
};

extern const char* const kTrialCsvHeader;

/// With a config, the CSV starts with "#" provenance lines carrying the
/// generator id and the full config as one-line JSON.
std::string records_to_csv(const std::vector<TrialRecord>& records, const ExperimentConfig* cfg = nullptr);

struct RunResult {
  std::vector<TrialRecord> records;
  nlohmann::ordered_json summary;
};

/// Runs every (n, trial) cell of the config; trials are independent tasks
/// and may execute on a worker pool (threads = 0 picks the hardware
/// count). Records and summary are identical under any schedule. For
/// solver experiments with n <= 25 every answer is cross-checked against
/// the subset-search oracle; a mismatch aborts the run.
RunResult run_experiment(const ExperimentConfig& cfg, int threads = 0);

struct NormalizedCostPoint {
  int n = 0;
  double normalized_mean = 0.0;  // E[cost] / n^c
  double running_sum = 0.0;      // partial sums across the grid
};

struct AvgFptTrend {
  std::vector<NormalizedCostPoint> points;
  bool non_increasing = false;  // descriptive verdict over the grid
};

AvgFptTrend avgfpt_diagnostic(const std::vector<TrialRecord>& records, int c, const std::vector<int>& n_grid);

struct ExceedancePoint {
  int n = 0;
  double threshold = 0.0;
  double fraction = 0.0;
};

/// Fraction of trials whose measure exceeds a per-n threshold. The
/// default measure is the cost counter.
std::vector<ExceedancePoint> typfpt_diagnostic(
    const std::vector<TrialRecord>& records, const std::vector<int>& n_grid,
    const std::function<double(int)>& threshold_for_n,
    const std::function<double(const TrialRecord&)>& measure = {});

enum class TailSumMethod { Auto, Census, MaximalSubsets };

/// Sum of K_s(G) over s >= s1, either from the census or by collecting
/// distinct sub-cliques of the maximal cliques; the two routes agree.
std::uint64_t clique_size_tail_sum(const Graph& g, int s1, TailSumMethod method = TailSumMethod::Auto);

}  // namespace avgclique
