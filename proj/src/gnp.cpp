#include "avgclique/gnp.hpp"

#include <algorithm>
#include <cmath>

namespace avgclique {

double NaturalDistribution::eval_p(int n) const {
  if (n < 2) throw std::domain_error("eval_p requires n >= 2");
  double p = 0.0;
  switch (kind_) {
    case Kind::Zero:
      p = 0.0;
      break;
    case Kind::Constant:
      p = param_;
      break;
    case Kind::InverseLog:
      p = 1.0 / std::log2(static_cast<double>(n));
      break;
    case Kind::PowerLaw:
      p = std::pow(static_cast<double>(n), -param_);
      break;
    case Kind::CriticalWindow:
      p = std::pow(static_cast<double>(n), -2.0 / (k0_ - 1));
      break;
  }
  return std::clamp(p, 0.0, 1.0);
}

double NaturalDistribution::exponent(int n) const {
  if (kind_ == Kind::Zero) throw std::domain_error("the zero preset has no exponent function");
  if (n < 2) throw std::domain_error("exponent requires n >= 2");
  switch (kind_) {
    case Kind::PowerLaw:
      return param_;
    case Kind::CriticalWindow:
      return 2.0 / (k0_ - 1);
    default:
      return -std::log(eval_p(n)) / std::log(static_cast<double>(n));
  }
}

std::optional<double> NaturalDistribution::limit_exponent() const {
  switch (kind_) {
    case Kind::Zero:
      return std::nullopt;
    case Kind::Constant:
    case Kind::InverseLog:
      return 0.0;
    case Kind::PowerLaw:
      return param_;
    case Kind::CriticalWindow:
      return 2.0 / (k0_ - 1);
  }
  return std::nullopt;
}

std::string NaturalDistribution::describe() const {
  switch (kind_) {
    case Kind::Zero:
      return "zero";
    case Kind::Constant:
      return "constant(p=" + std::to_string(param_) + ")";
    case Kind::InverseLog:
      return "inverse_log";
    case Kind::PowerLaw:
      return "power_law(c=" + std::to_string(param_) + ")";
    case Kind::CriticalWindow:
      return "critical_window(k=" + std::to_string(k0_) + ")";
  }
  return "?";
}

nlohmann::ordered_json NaturalDistribution::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case Kind::Zero:
      j["kind"] = "zero";
      break;
    case Kind::Constant:
      j["kind"] = "constant";
      j["p"] = param_;
      break;
    case Kind::InverseLog:
      j["kind"] = "inverse_log";
      break;
    case Kind::PowerLaw:
      j["kind"] = "power_law";
      j["c"] = param_;
      break;
    case Kind::CriticalWindow:
      j["kind"] = "critical_window";
      j["k"] = k0_;
      break;
  }
  return j;
}

NaturalDistribution NaturalDistribution::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return zero();
  if (kind == "constant") return constant(j.at("p").get<double>());
  if (kind == "inverse_log") return inverse_log();
  if (kind == "power_law") return power_law(j.at("c").get<double>());
  if (kind == "critical_window") return critical_window(j.at("k").get<int>());
  throw std::invalid_argument("unknown distribution kind '" + kind + "'");
}

Graph sample_gnp(const NaturalDistribution& dist, int n, RngSeed seed) {
  if (n < 0) throw std::domain_error("sample_gnp requires n >= 0");
  Graph g(n);
  if (n < 2) return g;
  const double p = dist.eval_p(n);
  Rng rng(seed, RngDomain::EdgeSampling, static_cast<std::uint64_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace avgclique
