#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "avgclique/graph.hpp"
#include "avgclique/rng.hpp"

namespace avgclique {

/// Edge-probability presets of the form p(n) = n^{-g(n)} with a declared
/// limit c_g of the exponent, plus the degenerate all-zero preset. The set
/// is closed: c_g is a property of the preset, never estimated from data.
class NaturalDistribution {
 public:
  enum class Kind { Zero, Constant, InverseLog, PowerLaw, CriticalWindow };

  static NaturalDistribution zero() { return NaturalDistribution(Kind::Zero, 0.0, 0); }

  /// p(n) = p0 for a constant p0 in (0, 1].
  static NaturalDistribution constant(double p0) {
    if (!(p0 > 0.0) || p0 > 1.0) throw std::domain_error("constant preset requires p in (0,1]");
    return NaturalDistribution(Kind::Constant, p0, 0);
  }

  /// p(n) = 1 / log2(n).
  static NaturalDistribution inverse_log() { return NaturalDistribution(Kind::InverseLog, 0.0, 0); }

  /// p(n) = n^{-c} for a constant c > 0.
  static NaturalDistribution power_law(double c) {
    if (!(c > 0.0)) throw std::domain_error("power-law preset requires c > 0");
    return NaturalDistribution(Kind::PowerLaw, c, 0);
  }

  /// p(n) = n^{-2/(k0-1)}: the density at which k0-cliques first appear.
  static NaturalDistribution critical_window(int k0) {
    if (k0 < 3) throw std::domain_error("critical-window preset requires k >= 3");
    return NaturalDistribution(Kind::CriticalWindow, 0.0, k0);
  }

  Kind kind() const { return kind_; }

  /// p(n); requires n >= 2. Result clamped to [0, 1].
  double eval_p(int n) const;

  /// Exponent g(n) = -log_n p(n); requires n >= 2 and a non-Zero kind.
  double exponent(int n) const;

  /// Limit of g(n): 0 for Constant and InverseLog, c for PowerLaw,
  /// 2/(k0-1) for CriticalWindow. Zero has no exponent function.
  std::optional<double> limit_exponent() const;

  std::string describe() const;

  nlohmann::ordered_json to_json() const;
  static NaturalDistribution from_json(const nlohmann::json& j);

  bool operator==(const NaturalDistribution& o) const {
    return kind_ == o.kind_ && param_ == o.param_ && k0_ == o.k0_;
  }

 private:
  NaturalDistribution(Kind kind, double param, int k0) : kind_(kind), param_(param), k0_(k0) {}
  Kind kind_;
  double param_;  // p0 for Constant, c for PowerLaw
  int k0_;        // CriticalWindow clique size
};

/// G(n, p(n)) sample: each of the C(n,2) vertex pairs is an edge
/// independently with probability p(n). One uniform variate is consumed
/// per pair, in lexicographic pair order, from the substream keyed by
/// (seed, stream, n); the result is bit-identical for equal keys.
Graph sample_gnp(const NaturalDistribution& dist, int n, RngSeed seed);

}  // namespace avgclique
