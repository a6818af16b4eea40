#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "avgclique/dimacs.hpp"
#include "avgclique/experiment.hpp"
#include "avgclique/formulas.hpp"
#include "avgclique/gnp.hpp"
#include "avgclique/maximal_cliques.hpp"
#include "avgclique/solvers.hpp"

namespace {

using namespace avgclique;

constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

/// Bad flag values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& input_path) {
  if (input_path.empty() || input_path == "-") return parse_dimacs(std::cin);
  std::ifstream in(input_path);
  if (!in) throw std::runtime_error("cannot open input file '" + input_path + "'");
  return parse_dimacs(in);
}

NaturalDistribution parse_dist(const std::string& text) {
  try {
    return NaturalDistribution::from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("invalid --dist JSON: " + std::string(e.what()));
  } catch (const std::domain_error& e) {
    throw UsageError("invalid --dist value: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid --dist value: " + std::string(e.what()));
  }
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("AVGCLIQUE_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 0;  // runner picks hardware concurrency
}

struct Options {
  std::string dist_json;
  std::string input;
  std::string algo = "auto";
  std::string config_path;
  std::string out_dir;
  int n = 0;
  int k = 0;
  int s = 0;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  int restarts = 100;
  int max_n_guard = 20;
  bool force = false;
  bool timing = false;
  int threads = 0;
  double p = -1.0;
  double cg = -1.0;
  double t = -1.0;
};

int cmd_sample(const Options& opt) {
  const NaturalDistribution dist = parse_dist(opt.dist_json);
  const Graph g = sample_gnp(dist, opt.n, RngSeed{opt.seed, opt.stream});
  std::cout << serialize_dimacs(g);
  return 0;
}

int cmd_decide(const Options& opt) {
  const Graph g = load_graph(opt.input);
  std::optional<NaturalDistribution> dist;
  if (!opt.dist_json.empty()) dist = parse_dist(opt.dist_json);

  DecisionResult result;
  if (opt.algo == "auto") {
    if (!dist) throw UsageError("--algo auto needs --dist to pick a branch");
    result = adaptive_decide(g, opt.k, *dist);
  } else if (opt.algo == "A") {
    result = algorithm_A(g, opt.k);
  } else if (opt.algo == "B") {
    result = algorithm_B(g, opt.k);
  } else if (opt.algo == "brute") {
    result = brute_force_decide(g, opt.k);
  } else if (opt.algo == "greedy") {
    RepeatedGreedyResult rg = repeated_greedy(g, opt.k, opt.restarts, RngSeed{opt.seed, opt.stream});
    result.answer = rg.found;
    if (rg.found && opt.k >= 0) result.witness = VertexSet(rg.best.begin(), rg.best.begin() + opt.k);
    result.cost = rg.cost;
    result.path = SolverPath::GreedyHeuristic;
  } else {
    throw UsageError("unknown --algo '" + opt.algo + "' (expected auto, A, B, brute, greedy)");
  }
  std::cout << result.to_json(opt.timing).dump(2) << "\n";
  return result.answer ? 0 : kExitNo;
}

int cmd_enumerate(const Options& opt) {
  const Graph g = load_graph(opt.input);
  auto print = [](MaximalCliqueStream& stream) {
    while (auto clique = stream.next()) {
      for (std::size_t i = 0; i < clique->size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << (*clique)[i] + 1;
      }
      std::cout << '\n';
    }
  };
  if (opt.algo == "incremental" || opt.algo == "auto") {
    VertexIncrementalStream stream(g);
    print(stream);
  } else if (opt.algo == "pivot") {
    PivotBacktrackingStream stream(g);
    print(stream);
  } else {
    throw UsageError("unknown --algo '" + opt.algo + "' (expected incremental or pivot)");
  }
  return 0;
}

int cmd_census(const Options& opt) {
  const Graph g = load_graph(opt.input);
  if (g.vertex_count() > opt.max_n_guard && !opt.force)
    throw std::runtime_error("n=" + std::to_string(g.vertex_count()) + " exceeds the census guard " +
                             std::to_string(opt.max_n_guard) + " (pass --force to override)");
  const CliqueCensus census = count_cliques_by_size(g);
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  nlohmann::ordered_json counts;
  for (const auto& [s, c] : census.counts) counts[std::to_string(s)] = c;
  j["counts"] = counts;
  j["total"] = census.total;
  j["max_clique"] = max_clique_size_bruteforce(g);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_experiment(const Options& opt) {
  std::ifstream in(opt.config_path);
  if (!in) throw std::runtime_error("cannot open config file '" + opt.config_path + "'");
  nlohmann::json raw;
  in >> raw;
  const ExperimentConfig cfg = ExperimentConfig::from_json(raw);
  const RunResult result = run_experiment(cfg, resolve_threads(opt.threads));

  const std::filesystem::path dir(opt.out_dir.empty() ? "." : opt.out_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream records(dir / "records.csv", std::ios::binary);
    records << records_to_csv(result.records, &cfg);
  }
  {
    std::ofstream summary(dir / "summary.json", std::ios::binary);
    summary << result.summary.dump(2) << "\n";
  }
  std::cout << "wrote " << (dir / "records.csv").string() << " (" << result.records.size() << " trials) and "
            << (dir / "summary.json").string() << "\n";
  return 0;
}

int cmd_formulas(const Options& opt) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  std::optional<NaturalDistribution> dist;
  if (!opt.dist_json.empty()) dist = parse_dist(opt.dist_json);

  const int n = opt.n;
  if (n < 2) throw UsageError("--n must be >= 2");
  j["n"] = n;

  double p = opt.p;
  if (p < 0.0 && dist) p = dist->eval_p(n);
  if (p < 0.0) throw UsageError("need --p or --dist to fix the edge probability");
  if (p > 1.0) throw UsageError("--p must lie in [0,1]");
  j["p"] = p;

  std::optional<double> g_n;
  if (dist && dist->kind() != NaturalDistribution::Kind::Zero) {
    g_n = dist->exponent(n);
  } else if (p > 0.0) {
    g_n = -std::log(p) / std::log(static_cast<double>(n));
  }
  if (g_n) j["g_n"] = *g_n;

  std::optional<double> c_g;
  if (opt.cg >= 0.0)
    c_g = opt.cg;
  else if (dist)
    c_g = dist->limit_exponent();
  if (c_g) j["c_g"] = *c_g;

  if (opt.s >= 2) {
    const auto mu = expected_clique_count(n, p, opt.s, g_n);
    j["s"] = opt.s;
    j["mu_s"] = mu.mu;
    j["log_mu_s"] = mu.log_mu;
    if (mu.exponent_bound) j["mu_exponent_bound"] = *mu.exponent_bound;
    const auto dep = dependency_degree_bound(n, opt.s);
    j["delta_exact"] = dep.exact;
    j["delta_bound"] = dep.bound;
    j["delta_s_above_half_n"] = dep.s_above_half_n;
    if (opt.t >= 0.0 && mu.mu > 0.0)
      j["jr_tail_bound"] = jr_tail_bound(mu.mu, opt.t, std::max(dep.bound, 1.0));
  }
  if (opt.k >= 2) {
    j["k"] = opt.k;
    const auto exact = prob_no_elementary_clique_exact(n, opt.k, p);
    j["prob_no_elementary_exact"] = exact.value;
    j["log_prob_no_elementary_exact"] = exact.log_value;
    if (g_n) {
      const auto bound = lemma1_bound(n, opt.k, *g_n);
      j["block_miss_bound"] = bound.value;
      j["log_block_miss_bound"] = bound.log_value;
      j["block_miss_hypothesis_ok"] = bound.hypothesis_ok;
    }
  }
  if (c_g && *c_g > 0.0) {
    j["s0"] = s0_threshold(*c_g);
    j["s1"] = s1_threshold(*c_g);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"avgclique: k-clique deciders, clique statistics, and Monte-Carlo experiments on G(n,p)"};
  app.require_subcommand(1);
  Options opt;

  auto* sample = app.add_subcommand("sample", "sample a G(n,p) graph and print DIMACS");
  sample->add_option("--dist", opt.dist_json, "distribution preset JSON, e.g. '{\"kind\":\"constant\",\"p\":0.5}'")
      ->required();
  sample->add_option("--n", opt.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", opt.seed, "random seed");
  sample->add_option("--stream", opt.stream, "substream id");

  auto* decide = app.add_subcommand("decide", "decide k-clique on a DIMACS graph (stdin or --input)");
  decide->add_option("--algo", opt.algo, "auto | A | B | brute | greedy (default auto)");
  decide->add_option("--k", opt.k, "clique size")->required()->check(CLI::NonNegativeNumber);
  decide->add_option("--input", opt.input, "DIMACS file (default stdin)");
  decide->add_option("--dist", opt.dist_json, "distribution preset JSON (required for --algo auto)");
  decide->add_option("--restarts", opt.restarts, "greedy restarts (default 100)");
  decide->add_option("--seed", opt.seed, "greedy seed");
  decide->add_option("--stream", opt.stream, "greedy substream id");
  decide->add_flag("--timing", opt.timing, "include wall time in the output");

  auto* enumerate = app.add_subcommand("enumerate", "stream maximal cliques, one sorted 1-based line each");
  enumerate->add_option("--input", opt.input, "DIMACS file (default stdin)");
  enumerate->add_option("--algo", opt.algo, "incremental | pivot (default incremental)");

  auto* census = app.add_subcommand("census", "count cliques of every size");
  census->add_option("--input", opt.input, "DIMACS file (default stdin)");
  census->add_option("--max-n-guard", opt.max_n_guard, "refuse graphs larger than this (default 20)");
  census->add_flag("--force", opt.force, "run the census regardless of size");

  auto* experiment = app.add_subcommand("experiment", "run a Monte-Carlo experiment from a JSON config");
  experiment->add_option("--config", opt.config_path, "experiment config JSON file")->required();
  experiment->add_option("--out-dir", opt.out_dir, "output directory (records.csv, summary.json)")->required();
  experiment->add_option("--threads", opt.threads, "worker threads (default: AVGCLIQUE_THREADS or hardware)");

  auto* formulas = app.add_subcommand("formulas", "print closed-form clique statistics for given parameters");
  formulas->add_option("--n", opt.n, "vertex count")->required();
  formulas->add_option("--p", opt.p, "edge probability (or derive from --dist)");
  formulas->add_option("--dist", opt.dist_json, "distribution preset JSON");
  formulas->add_option("--s", opt.s, "clique size for expectation/dependency formulas");
  formulas->add_option("--k", opt.k, "clique size for block-scan formulas");
  formulas->add_option("--t", opt.t, "tail offset for the upper-tail bound");
  formulas->add_option("--cg", opt.cg, "limit exponent override for the s0/s1 thresholds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (sample->parsed()) return cmd_sample(opt);
    if (decide->parsed()) return cmd_decide(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (census->parsed()) return cmd_census(opt);
    if (experiment->parsed()) return cmd_experiment(opt);
    if (formulas->parsed()) return cmd_formulas(opt);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
