#include "avgclique/formulas.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace avgclique {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double pairs_in(int k) { return 0.5 * k * (k - 1.0); }

/// Ceiling that forgives values a hair below an integer, so exact
/// rational limits (e.g. 2/(k-1)) do not round up spuriously.
long long ceil_tolerant(double x) {
  const double r = std::nearbyint(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(x));
}

void require_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error(std::string(who) + ": p must lie in [0,1]");
}

}  // namespace

double choose_double(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<double>(r);
}

double log_choose(int n, int k) {
  if (k < 0 || k > n) return -kInf;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

ProbValue prob_no_elementary_clique_exact(int n, int k, double p) {
  if (k < 2 || k > n) throw std::domain_error("prob_no_elementary_clique_exact requires 2 <= k <= n");
  require_probability(p, "prob_no_elementary_clique_exact");
  const double blocks = std::floor(static_cast<double>(n) / k);
  const double log_q = pairs_in(k) * std::log(p);  // q = p^C(k,2)
  const double q = std::exp(log_q);
  if (q >= 1.0) return {0.0, -kInf};
  const double log_value = blocks * std::log1p(-q);
  return {std::exp(log_value), log_value};
}

BlockMissBound lemma1_bound(int n, int k, double g_n) {
  if (n < 1 || k < 1) throw std::domain_error("lemma1_bound requires n >= 1 and k >= 1");
  BlockMissBound b;
  const double exponent = 1.0 - g_n * pairs_in(k);
  b.log_value = -std::exp(exponent * std::log(static_cast<double>(n))) / (2.0 * k);
  b.value = std::exp(b.log_value);
  const double k_cap_n = std::pow(static_cast<double>(n), 0.25);
  const double k_cap_g = g_n > 0.0 ? std::pow(g_n, -0.25) : kInf;
  b.hypothesis_ok = static_cast<double>(k) <= std::min(k_cap_n, k_cap_g);
  return b;
}

ExpectedCliqueCount expected_clique_count(int n, double p, int s, std::optional<double> g_n) {
  if (s < 2 || s > n) throw std::domain_error("expected_clique_count requires 2 <= s <= n");
  require_probability(p, "expected_clique_count");
  ExpectedCliqueCount e;
  const double c2 = pairs_in(s);
  if (p == 0.0) {
    e.mu = 0.0;
    e.log_mu = -kInf;
  } else {
    e.log_mu = log_choose(n, s) + c2 * std::log(p);
    const double binom = choose_double(n, s);
    e.mu = binom < 0x1p53 ? binom * std::pow(p, c2) : std::exp(e.log_mu);
  }
  if (g_n) {
    e.exponent_bound_log = (s - *g_n * c2) * std::log(static_cast<double>(n));
    e.exponent_bound = std::exp(*e.exponent_bound_log);
  }
  return e;
}

int s0_threshold(double c_g) {
  if (!(c_g > 0.0)) throw std::domain_error("s0_threshold requires c_g > 0");
  const long long q = ceil_tolerant(4.0 / c_g);
  if (q > (1LL << 30)) throw std::domain_error("s0_threshold: c_g too small");
  return static_cast<int>(2 * q + 1);
}

int s1_threshold(double c_g) {
  if (!(c_g > 0.0)) throw std::domain_error("s1_threshold requires c_g > 0");
  const long long q = ceil_tolerant(25.0 / c_g);
  if (q > (1LL << 30)) throw std::domain_error("s1_threshold: c_g too small");
  return static_cast<int>(std::max(q, 3LL));
}

DependencyDegree dependency_degree_bound(int n, int s) {
  if (s < 2 || s > n) throw std::domain_error("dependency_degree_bound requires 2 <= s <= n");
  DependencyDegree d;
  d.s_above_half_n = 2 * s > n;
  d.bound = 2.0 * s * s * std::pow(static_cast<double>(n), s - 2.0);
  if (s == n) {
    d.exact = 0.0;  // the only s-subset has no distinct overlapping partner
    return d;
  }
  double sum = 0.0;
  for (int i = 2; i <= s; ++i) sum += choose_double(s, i) * choose_double(n - s, s - i);
  d.exact = sum;
  return d;
}

double jr_tail_bound(double mu, double t, double delta) {
  if (!(mu > 0.0)) throw std::domain_error("jr_tail_bound requires mu > 0");
  if (t < 0.0) throw std::domain_error("jr_tail_bound requires t >= 0");
  if (delta < 1.0) throw std::domain_error("jr_tail_bound requires delta >= 1");
  return std::exp(-(t / (4.0 * delta)) * std::log1p(t / mu));
}

}  // namespace avgclique
