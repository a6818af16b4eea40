#include "avgclique/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "avgclique/formulas.hpp"
#include "avgclique/maximal_cliques.hpp"
#include "avgclique/rng.hpp"

namespace avgclique {

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::ElementaryMiss:
      return "elementary_miss";
    case ExperimentKind::CliqueCensusMean:
      return "clique_census_mean";
    case ExperimentKind::TailFrequency:
      return "tail_frequency";
    case ExperimentKind::SolverCost:
      return "solver_cost";
    case ExperimentKind::AvgFptDiagnostic:
      return "avgfpt_diagnostic";
    case ExperimentKind::TypFptDiagnostic:
      return "typfpt_diagnostic";
    case ExperimentKind::GreedyGap:
      return "greedy_gap";
  }
  return "?";
}

const char* to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Brute:
      return "brute";
    case SolverKind::AlgorithmA:
      return "A";
    case SolverKind::AlgorithmB:
      return "B";
    case SolverKind::Adaptive:
      return "adaptive";
    case SolverKind::Greedy:
      return "greedy";
  }
  return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
  for (ExperimentKind k :
       {ExperimentKind::ElementaryMiss, ExperimentKind::CliqueCensusMean, ExperimentKind::TailFrequency,
        ExperimentKind::SolverCost, ExperimentKind::AvgFptDiagnostic, ExperimentKind::TypFptDiagnostic,
        ExperimentKind::GreedyGap}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown experiment kind '" + s + "'");
}

SolverKind solver_kind_from_string(const std::string& s) {
  for (SolverKind k : {SolverKind::Brute, SolverKind::AlgorithmA, SolverKind::AlgorithmB, SolverKind::Adaptive,
                       SolverKind::Greedy}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown solver '" + s + "'");
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (n_grid.empty()) throw std::invalid_argument("config: n_grid must be non-empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 0) throw std::invalid_argument("config: n_grid entries must be non-negative");
    if (i > 0 && n_grid[i] <= n_grid[i - 1])
      throw std::invalid_argument("config: n_grid must be strictly increasing");
  }
  if (restarts < 1) throw std::invalid_argument("config: restarts must be >= 1");
  if (sigma_multiple <= 0) throw std::invalid_argument("config: sigma_multiple must be positive");
  switch (kind) {
    case ExperimentKind::ElementaryMiss:
      if (k < 2 || k > n_grid.front())
        throw std::invalid_argument("config: elementary_miss requires 2 <= k <= min(n_grid)");
      break;
    case ExperimentKind::CliqueCensusMean:
    case ExperimentKind::TailFrequency:
      if (k < 2 || k > n_grid.front())
        throw std::invalid_argument("config: census experiments require 2 <= s <= min(n_grid)");
      if (kind == ExperimentKind::TailFrequency && t_grid.empty())
        throw std::invalid_argument("config: tail_frequency requires a t_grid");
      break;
    case ExperimentKind::AvgFptDiagnostic:
      if (!normalization_exponent) throw std::invalid_argument("config: avgfpt_diagnostic requires c");
      break;
    case ExperimentKind::TypFptDiagnostic:
      if (threshold.kind == ThresholdSpec::Kind::S1CliqueCount) {
        auto c_g = distribution.limit_exponent();
        if (!c_g || !(*c_g > 0.0))
          throw std::invalid_argument("config: the s1 threshold needs a distribution with positive limit exponent");
      }
      break;
    case ExperimentKind::GreedyGap: {
      auto c_g = distribution.limit_exponent();
      if (c_g && *c_g > 0.0)
        throw std::invalid_argument("config: greedy_gap expects a dense (limit exponent 0) or zero distribution");
      break;
    }
    case ExperimentKind::SolverCost:
      break;
  }
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["kind"] = to_string(kind);
  j["distribution"] = distribution.to_json();
  j["n_grid"] = n_grid;
  j["k"] = k;
  j["trials"] = trials;
  j["seed"] = seed;
  j["solver"] = to_string(solver);
  if (normalization_exponent) j["c"] = *normalization_exponent;
  if (kind == ExperimentKind::TailFrequency) j["t_grid"] = t_grid;
  if (kind == ExperimentKind::TypFptDiagnostic) {
    nlohmann::ordered_json t;
    if (threshold.kind == ThresholdSpec::Kind::S1CliqueCount) {
      t["kind"] = "s1_clique_count";
    } else {
      t["kind"] = "cost_power";
      t["coeff"] = threshold.coeff;
      t["exponent"] = threshold.exponent;
    }
    j["threshold"] = t;
  }
  if (kind == ExperimentKind::GreedyGap || solver == SolverKind::Greedy) j["restarts"] = restarts;
  j["disable_short_circuit"] = disable_short_circuit;
  j["sigma_multiple"] = sigma_multiple;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  cfg.kind = experiment_kind_from_string(j.at("kind").get<std::string>());
  cfg.distribution = NaturalDistribution::from_json(j.at("distribution"));
  cfg.n_grid = j.at("n_grid").get<std::vector<int>>();
  if (j.contains("k"))
    cfg.k = j.at("k").get<int>();
  else if (j.contains("s"))
    cfg.k = j.at("s").get<int>();
  cfg.trials = j.at("trials").get<int>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("solver")) cfg.solver = solver_kind_from_string(j.at("solver").get<std::string>());
  if (j.contains("c")) cfg.normalization_exponent = j.at("c").get<int>();
  if (j.contains("t_grid")) cfg.t_grid = j.at("t_grid").get<std::vector<double>>();
  if (j.contains("threshold")) {
    const auto& t = j.at("threshold");
    const std::string kind = t.at("kind").get<std::string>();
    if (kind == "s1_clique_count") {
      cfg.threshold.kind = ThresholdSpec::Kind::S1CliqueCount;
    } else if (kind == "cost_power") {
      cfg.threshold.kind = ThresholdSpec::Kind::CostPower;
      cfg.threshold.coeff = t.at("coeff").get<double>();
      cfg.threshold.exponent = t.at("exponent").get<double>();
    } else {
      throw std::invalid_argument("unknown threshold kind '" + kind + "'");
    }
  }
  if (j.contains("restarts")) cfg.restarts = j.at("restarts").get<int>();
  if (j.contains("disable_short_circuit")) cfg.disable_short_circuit = j.at("disable_short_circuit").get<bool>();
  if (j.contains("sigma_multiple")) cfg.sigma_multiple = j.at("sigma_multiple").get<double>();
  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------
// CSV

const char* const kTrialCsvHeader =
    "n,k,trial,stream,cost,answer,path,lemma1_hyp,ks_count,total_cliques,tail_sum,greedy_size,repeated_size,"
    "max_size";

namespace {

template <typename T>
void csv_cell(std::ostringstream& out, const std::optional<T>& v) {
  out << ',';
  if (v) out << *v;
}

void csv_cell(std::ostringstream& out, const std::optional<bool>& v) {
  out << ',';
  if (v) out << (*v ? 1 : 0);
}

void csv_cell(std::ostringstream& out, const std::optional<SolverPath>& v) {
  out << ',';
  if (v) out << to_string(*v);
}

}  // namespace

std::string records_to_csv(const std::vector<TrialRecord>& records, const ExperimentConfig* cfg) {
  std::ostringstream out;
  if (cfg) {
    out << "# generator " << kGeneratorId << '\n';
    out << "# config " << cfg->to_json().dump() << '\n';
  }
  out << kTrialCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << r.k << ',' << r.trial << ',' << r.stream << ',' << r.cost;
    csv_cell(out, r.answer);
    csv_cell(out, r.path);
    csv_cell(out, r.lemma1_hyp);
    csv_cell(out, r.ks_count);
    csv_cell(out, r.total_cliques);
    csv_cell(out, r.tail_sum);
    csv_cell(out, r.greedy_size);
    csv_cell(out, r.repeated_size);
    csv_cell(out, r.max_size);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------
// Tail sums

namespace {

void collect_subsets(const VertexSet& clique, std::size_t from, int s1, VertexSet& current,
                     std::set<VertexSet>& seen) {
  if (static_cast<int>(current.size()) >= s1) seen.insert(current);
  for (std::size_t i = from; i < clique.size(); ++i) {
    current.push_back(clique[i]);
    collect_subsets(clique, i + 1, s1, current, seen);
    current.pop_back();
  }
}

}  // namespace

std::uint64_t clique_size_tail_sum(const Graph& g, int s1, TailSumMethod method) {
  if (s1 < 2) throw std::domain_error("clique_size_tail_sum requires s1 >= 2");
  if (method == TailSumMethod::Auto)
    method = g.vertex_count() <= 40 ? TailSumMethod::Census : TailSumMethod::MaximalSubsets;
  if (method == TailSumMethod::Census) {
    CliqueCensus census = count_cliques_by_size(g);
    std::uint64_t sum = 0;
    for (const auto& [s, c] : census.counts) {
      if (s >= s1) sum += c;
    }
    return sum;
  }
  PivotBacktrackingStream stream(g);
  std::set<VertexSet> seen;
  while (auto clique = stream.next()) {
    if (static_cast<int>(clique->size()) < s1) continue;
    VertexSet current;
    collect_subsets(*clique, 0, s1, current, seen);
  }
  return seen.size();
}

// ---------------------------------------------------------------------
// Runner

namespace {

DecisionResult run_solver(const ExperimentConfig& cfg, const Graph& g, int trial) {
  switch (cfg.solver) {
    case SolverKind::Brute:
      return brute_force_decide(g, cfg.k);
    case SolverKind::AlgorithmA:
      return algorithm_A(g, cfg.k);
    case SolverKind::AlgorithmB:
      return algorithm_B(g, cfg.k, {!cfg.disable_short_circuit});
    case SolverKind::Adaptive:
      return adaptive_decide(g, cfg.k, cfg.distribution);
    case SolverKind::Greedy: {
      RepeatedGreedyResult rg =
          repeated_greedy(g, cfg.k, cfg.restarts, RngSeed{cfg.seed, static_cast<std::uint64_t>(trial)});
      DecisionResult r;
      r.answer = rg.found;
      if (rg.found) r.witness = VertexSet(rg.best.begin(), rg.best.begin() + cfg.k);
      r.cost = rg.cost;
      r.path = SolverPath::GreedyHeuristic;
      return r;
    }
  }
  throw std::logic_error("unreachable solver kind");
}

TrialRecord run_trial(const ExperimentConfig& cfg, int n, int trial) {
  TrialRecord rec;
  rec.n = n;
  rec.k = cfg.k;
  rec.trial = trial;
  rec.stream = static_cast<std::uint64_t>(trial);
  const RngSeed seed{cfg.seed, rec.stream};
  const Graph g = sample_gnp(cfg.distribution, n, seed);

  switch (cfg.kind) {
    case ExperimentKind::ElementaryMiss: {
      rec.answer = elementary_clique_scan(g, cfg.k, &rec.cost).has_value();
      break;
    }
    case ExperimentKind::CliqueCensusMean:
    case ExperimentKind::TailFrequency: {
      CostCounter cost;
      CliqueCensus census = count_cliques_by_size(g, &cost);
      rec.cost = cost.queries;
      rec.ks_count = census.at(cfg.k);
      rec.total_cliques = census.total;
      break;
    }
    case ExperimentKind::SolverCost:
    case ExperimentKind::AvgFptDiagnostic: {
      DecisionResult r = run_solver(cfg, g, trial);
      rec.cost = r.cost;
      rec.answer = r.answer;
      rec.path = r.path;
      rec.lemma1_hyp = r.lemma1_hypothesis;
      if (!rec.lemma1_hyp && cfg.solver == SolverKind::AlgorithmA)
        rec.lemma1_hyp = lemma1_scan_hypothesis(cfg.distribution, n, cfg.k);
      if (n <= 25) {  // per-trial oracle cross-check
        const bool oracle = brute_force_decide(g, cfg.k).answer;
        const bool consistent =
            cfg.solver == SolverKind::Greedy ? (!r.answer || oracle) : (r.answer == oracle);
        if (!consistent)
          throw std::logic_error("solver disagrees with subset-search oracle at n=" + std::to_string(n) +
                                 " trial=" + std::to_string(trial));
        if (r.answer && r.witness && !is_clique(g, *r.witness))
          throw std::logic_error("solver produced an invalid witness at n=" + std::to_string(n));
      }
      break;
    }
    case ExperimentKind::TypFptDiagnostic: {
      CliqueCensus census = count_cliques_by_size(g);
      rec.total_cliques = census.total;
      if (auto c_g = cfg.distribution.limit_exponent(); c_g && *c_g > 0.0) {
        const int s1 = s1_threshold(*c_g);
        std::uint64_t sum = 0;
        for (const auto& [s, c] : census.counts) {
          if (s >= s1) sum += c;
        }
        rec.tail_sum = sum;
      }
      rec.cost = algorithm_B(g, cfg.k, {false}).cost;
      break;
    }
    case ExperimentKind::GreedyGap: {
      std::uint64_t cost = 0;
      if (n > 0) {
        rec.greedy_size = static_cast<int>(greedy_clique(g, 0, &cost).size());
        RepeatedGreedyResult rg = repeated_greedy(g, cfg.k, cfg.restarts, seed);
        cost += rg.cost;
        rec.repeated_size = static_cast<int>(rg.best.size());
        if (n <= 30) rec.max_size = max_clique_size_bruteforce(g);
      }
      rec.cost = cost;
      break;
    }
  }
  return rec;
}

struct PerN {
  int n = 0;
  std::vector<const TrialRecord*> records;
};

std::vector<PerN> group_by_n(const std::vector<TrialRecord>& records, const std::vector<int>& n_grid) {
  std::vector<PerN> groups;
  for (int n : n_grid) groups.push_back({n, {}});
  for (const auto& r : records) {
    for (auto& g : groups) {
      if (g.n == r.n) {
        g.records.push_back(&r);
        break;
      }
    }
  }
  return groups;
}

double mean_of(const std::vector<const TrialRecord*>& rs, const std::function<double(const TrialRecord&)>& f) {
  if (rs.empty()) return 0.0;
  double sum = 0.0;
  for (const auto* r : rs) sum += f(*r);
  return sum / static_cast<double>(rs.size());
}

/// Standard error of the mean, sample variance with n-1 normalization.
double stderr_of(const std::vector<const TrialRecord*>& rs, const std::function<double(const TrialRecord&)>& f) {
  if (rs.size() < 2) return 0.0;
  const double mean = mean_of(rs, f);
  double ss = 0.0;
  for (const auto* r : rs) {
    const double d = f(*r) - mean;
    ss += d * d;
  }
  return std::sqrt(ss / (static_cast<double>(rs.size()) - 1.0) / static_cast<double>(rs.size()));
}

double binomial_sigma(double p, std::size_t trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

nlohmann::ordered_json build_summary(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  nlohmann::ordered_json summary;
  summary["schema"] = "v1";
  summary["generator"] = kGeneratorId;
  summary["config"] = cfg.to_json();

  auto cost_of = [](const TrialRecord& r) { return static_cast<double>(r.cost); };
  auto groups = group_by_n(records, cfg.n_grid);
  nlohmann::ordered_json per_n = nlohmann::ordered_json::array();
  double running_sum = 0.0;

  for (const auto& grp : groups) {
    nlohmann::ordered_json j;
    j["n"] = grp.n;
    j["trials"] = grp.records.size();
    j["mean_cost"] = mean_of(grp.records, cost_of);
    j["stderr_cost"] = stderr_of(grp.records, cost_of);

    switch (cfg.kind) {
      case ExperimentKind::ElementaryMiss: {
        const double miss =
            mean_of(grp.records, [](const TrialRecord& r) { return r.answer && *r.answer ? 0.0 : 1.0; });
        const double exact =
            prob_no_elementary_clique_exact(grp.n, cfg.k, cfg.distribution.eval_p(grp.n)).value;
        const double sigma = binomial_sigma(exact, grp.records.size());
        j["miss_frequency"] = miss;
        j["exact_probability"] = exact;
        j["binomial_sigma"] = sigma;
        j["within_sigma"] = std::abs(miss - exact) <= cfg.sigma_multiple * sigma;
        break;
      }
      case ExperimentKind::CliqueCensusMean: {
        auto ks = [](const TrialRecord& r) { return static_cast<double>(r.ks_count.value_or(0)); };
        const double mean = mean_of(grp.records, ks);
        const double se = stderr_of(grp.records, ks);
        const double mu = expected_clique_count(grp.n, cfg.distribution.eval_p(grp.n), cfg.k).mu;
        j["mean_ks"] = mean;
        j["stderr_ks"] = se;
        j["expected_mu"] = mu;
        j["within_stderr"] = std::abs(mean - mu) <= cfg.sigma_multiple * se;
        break;
      }
      case ExperimentKind::TailFrequency: {
        const double p = cfg.distribution.eval_p(grp.n);
        const double mu = expected_clique_count(grp.n, p, cfg.k).mu;
        const double delta = std::max(dependency_degree_bound(grp.n, cfg.k).bound, 1.0);
        j["expected_mu"] = mu;
        j["delta_bound"] = delta;
        nlohmann::ordered_json grid = nlohmann::ordered_json::array();
        bool all_sound = true;
        for (double t : cfg.t_grid) {
          const double freq = mean_of(grp.records, [&](const TrialRecord& r) {
            return static_cast<double>(r.ks_count.value_or(0)) >= mu + t ? 1.0 : 0.0;
          });
          const double bound = jr_tail_bound(mu, t, delta);
          const double se = binomial_sigma(freq, grp.records.size());
          const bool sound = freq <= bound + cfg.sigma_multiple * se;
          all_sound = all_sound && sound;
          grid.push_back({{"t", t}, {"frequency", freq}, {"bound", bound}, {"stderr", se}, {"sound", sound}});
        }
        j["t_grid"] = grid;
        j["all_sound"] = all_sound;
        break;
      }
      case ExperimentKind::SolverCost:
      case ExperimentKind::AvgFptDiagnostic: {
        j["yes_frequency"] =
            mean_of(grp.records, [](const TrialRecord& r) { return r.answer && *r.answer ? 1.0 : 0.0; });
        std::map<std::string, std::uint64_t> paths;
        std::uint64_t hyp_known = 0, hyp_true = 0;
        for (const auto* r : grp.records) {
          if (r->path) ++paths[to_string(*r->path)];
          if (r->lemma1_hyp) {
            ++hyp_known;
            if (*r->lemma1_hyp) ++hyp_true;
          }
        }
        j["paths"] = paths;
        if (hyp_known > 0)
          j["lemma1_hypothesis_fraction"] = static_cast<double>(hyp_true) / static_cast<double>(hyp_known);
        if (cfg.normalization_exponent) {
          const double norm =
              mean_of(grp.records, cost_of) / std::pow(static_cast<double>(grp.n), *cfg.normalization_exponent);
          running_sum += norm;
          j["normalized_mean_cost"] = norm;
          j["running_sum"] = running_sum;
        }
        break;
      }
      case ExperimentKind::TypFptDiagnostic: {
        double threshold = 0.0;
        std::function<double(const TrialRecord&)> measure = cost_of;
        if (cfg.threshold.kind == ThresholdSpec::Kind::S1CliqueCount) {
          const int s1 = s1_threshold(*cfg.distribution.limit_exponent());
          threshold = std::pow(static_cast<double>(grp.n), s1) + std::log2(static_cast<double>(grp.n));
          measure = [](const TrialRecord& r) { return static_cast<double>(r.total_cliques.value_or(0)); };
          j["s1"] = s1;
        } else {
          threshold = cfg.threshold.coeff * std::pow(static_cast<double>(grp.n), cfg.threshold.exponent);
        }
        const double frac =
            mean_of(grp.records, [&](const TrialRecord& r) { return measure(r) > threshold ? 1.0 : 0.0; });
        j["threshold"] = threshold;
        j["exceedance_fraction"] = frac;
        break;
      }
      case ExperimentKind::GreedyGap: {
        auto opt_mean = [&](const std::function<std::optional<int>(const TrialRecord&)>& f) -> std::optional<double> {
          double sum = 0.0;
          std::size_t count = 0;
          for (const auto* r : grp.records) {
            if (auto v = f(*r)) {
              sum += *v;
              ++count;
            }
          }
          if (count == 0) return std::nullopt;
          return sum / static_cast<double>(count);
        };
        if (auto m = opt_mean([](const TrialRecord& r) { return r.greedy_size; })) j["mean_greedy_size"] = *m;
        if (auto m = opt_mean([](const TrialRecord& r) { return r.repeated_size; })) j["mean_repeated_size"] = *m;
        if (auto m = opt_mean([](const TrialRecord& r) { return r.max_size; })) j["mean_max_size"] = *m;
        double ratio_sum = 0.0, ratio_sq = 0.0;
        std::size_t ratio_count = 0;
        for (const auto* r : grp.records) {
          if (r->greedy_size && r->max_size && *r->max_size > 0) {
            const double ratio = static_cast<double>(*r->greedy_size) / *r->max_size;
            ratio_sum += ratio;
            ratio_sq += ratio * ratio;
            ++ratio_count;
          }
        }
        if (ratio_count > 0) {
          j["mean_greedy_to_max_ratio"] = ratio_sum / static_cast<double>(ratio_count);
          j["ratio_trials"] = ratio_count;
        }
        break;
      }
    }
    per_n.push_back(j);
  }
  summary["per_n"] = per_n;

  if (cfg.kind == ExperimentKind::AvgFptDiagnostic && cfg.normalization_exponent) {
    AvgFptTrend trend = avgfpt_diagnostic(records, *cfg.normalization_exponent, cfg.n_grid);
    summary["non_increasing"] = trend.non_increasing;
  }
  return summary;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, int threads) {
  cfg.validate();
  const std::size_t total = cfg.n_grid.size() * static_cast<std::size_t>(cfg.trials);
  std::vector<TrialRecord> records(total);

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min<std::size_t>(threads, total);

  std::atomic<std::size_t> next_task{0};
  std::mutex error_mutex;
  std::string first_error;

  auto worker = [&]() {
    while (true) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= total) return;
      const int n = cfg.n_grid[task / static_cast<std::size_t>(cfg.trials)];
      const int trial = static_cast<int>(task % static_cast<std::size_t>(cfg.trials));
      try {
        records[task] = run_trial(cfg, n, trial);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!first_error.empty()) throw std::logic_error(first_error);

  nlohmann::ordered_json summary = build_summary(cfg, records);
  return {std::move(records), std::move(summary)};
}

AvgFptTrend avgfpt_diagnostic(const std::vector<TrialRecord>& records, int c, const std::vector<int>& n_grid) {
  AvgFptTrend trend;
  auto groups = group_by_n(records, n_grid);
  double running = 0.0;
  for (const auto& grp : groups) {
    const double mean =
        mean_of(grp.records, [](const TrialRecord& r) { return static_cast<double>(r.cost); });
    const double norm = mean / std::pow(static_cast<double>(grp.n), c);
    running += norm;
    trend.points.push_back({grp.n, norm, running});
  }
  trend.non_increasing = true;
  for (std::size_t i = 1; i < trend.points.size(); ++i) {
    if (trend.points[i].normalized_mean > trend.points[i - 1].normalized_mean) trend.non_increasing = false;
  }
  return trend;
}

std::vector<ExceedancePoint> typfpt_diagnostic(const std::vector<TrialRecord>& records,
                                               const std::vector<int>& n_grid,
                                               const std::function<double(int)>& threshold_for_n,
                                               const std::function<double(const TrialRecord&)>& measure) {
  std::function<double(const TrialRecord&)> m = measure;
  if (!m) m = [](const TrialRecord& r) { return static_cast<double>(r.cost); };
  std::vector<ExceedancePoint> points;
  for (const auto& grp : group_by_n(records, n_grid)) {
    const double threshold = threshold_for_n(grp.n);
    const double frac =
        mean_of(grp.records, [&](const TrialRecord& r) { return m(r) > threshold ? 1.0 : 0.0; });
    points.push_back({grp.n, threshold, frac});
  }
  return points;
}

}  // namespace avgclique
