#include <doctest.h>

#include <cmath>

#include "avgclique/formulas.hpp"
#include "avgclique/gnp.hpp"
#include "test_support.hpp"

using namespace avgclique;
namespace support = avgclique::testing;

TEST_SUITE_BEGIN("gnp_model");

TEST_CASE("block-miss probability, closed form") {
  const auto r = prob_no_elementary_clique_exact(30, 3, 0.5);
  CHECK(r.value == doctest::Approx(0.2630755762).epsilon(1e-9));
  CHECK(std::exp(r.log_value) == doctest::Approx(r.value));

  CHECK(prob_no_elementary_clique_exact(40, 4, 1.0).value == 0.0);
  CHECK(prob_no_elementary_clique_exact(12, 2, 0.0).value == 1.0);

  CHECK_THROWS_AS(prob_no_elementary_clique_exact(10, 1, 0.5), std::domain_error);
  CHECK_THROWS_AS(prob_no_elementary_clique_exact(10, 11, 0.5), std::domain_error);
  CHECK_THROWS_AS(prob_no_elementary_clique_exact(10, 3, 1.5), std::domain_error);
}

TEST_CASE("block-miss upper bound underflows gracefully and keeps its log") {
  const auto b = lemma1_bound(10000, 2, 0.01);
  // exponent 1 - 0.01*1 = 0.99, so log = -10^3.96 / 4
  CHECK(b.log_value == doctest::Approx(-std::pow(10.0, 3.96) / 4.0).epsilon(1e-9));
  CHECK(b.value == 0.0);
  CHECK(b.hypothesis_ok);  // 2 <= min(10, 0.01^{-1/4} ~ 3.16)
}

TEST_CASE("block-miss hypothesis flag") {
  CHECK_FALSE(lemma1_bound(16, 3, 0.001).hypothesis_ok);  // 3 > 16^{1/4}
  CHECK_FALSE(lemma1_bound(10000, 2, 1.0).hypothesis_ok);  // 2 > 1^{-1/4}
  CHECK(lemma1_bound(10000, 3, 0.001).hypothesis_ok);
  CHECK(lemma1_bound(16, 2, 0.0).hypothesis_ok);  // g = 0 caps only by n^{1/4}
}

TEST_CASE("exact block-miss probability never exceeds the closed-form bound") {
  for (int n : {100, 1000, 10000}) {
    const double g = 1.0 / std::log2(static_cast<double>(n));
    const double p = std::pow(n, -g);
    for (int k : {2, 3}) {
      const auto exact = prob_no_elementary_clique_exact(n, k, p);
      const auto bound = lemma1_bound(n, k, g);
      REQUIRE(exact.log_value <= bound.log_value + 1e-9);
    }
  }
}

TEST_CASE("expected clique count") {
  const auto e = expected_clique_count(20, 0.5, 3);
  CHECK(e.mu == doctest::Approx(142.5).epsilon(1e-12));
  CHECK(std::exp(e.log_mu) == doctest::Approx(142.5).epsilon(1e-9));

  CHECK(expected_clique_count(10, 1.0, 4).mu == doctest::Approx(210.0).epsilon(1e-12));
  CHECK(expected_clique_count(10, 0.0, 4).mu == 0.0);

  // with g supplied, mu <= n^{s - g C(s,2)} since C(n,s) <= n^s
  const double g = -std::log(0.5) / std::log(20.0);
  const auto with_bound = expected_clique_count(20, 0.5, 3, g);
  REQUIRE(with_bound.exponent_bound.has_value());
  CHECK(with_bound.mu <= *with_bound.exponent_bound);

  CHECK_THROWS_AS(expected_clique_count(10, 0.5, 1), std::domain_error);
  CHECK_THROWS_AS(expected_clique_count(10, 0.5, 11), std::domain_error);
}

TEST_CASE("size thresholds") {
  CHECK(s0_threshold(1.0) == 9);
  CHECK(s0_threshold(0.5) == 17);
  CHECK(s0_threshold(10.0) == 3);
  CHECK(s1_threshold(1.0) == 25);
  CHECK(s1_threshold(10.0) == 3);
  CHECK(s1_threshold(25.0) == 3);
  CHECK_THROWS_AS(s0_threshold(0.0), std::domain_error);
  CHECK_THROWS_AS(s1_threshold(-1.0), std::domain_error);

  // exact rational limits must not round up through float noise
  const double cw4 = *NaturalDistribution::critical_window(4).limit_exponent();  // 2/3
  CHECK(s0_threshold(cw4) == 13);   // ceil(4 / (2/3)) = 6
  CHECK(s1_threshold(cw4) == 38);   // ceil(25 / (2/3)) = 38
}

TEST_CASE("dependency degree: exact count and closed-form bound") {
  const auto d = dependency_degree_bound(10, 3);
  CHECK(d.exact == 22.0);
  CHECK(d.bound == 180.0);
  CHECK_FALSE(d.s_above_half_n);

  CHECK(dependency_degree_bound(6, 2).exact == 1.0);
  CHECK(dependency_degree_bound(5, 5).exact == 0.0);  // a full-vertex subset has no partner
  CHECK(dependency_degree_bound(5, 5).s_above_half_n);

  for (auto [n, s] : {std::pair{10, 3}, std::pair{6, 2}, std::pair{8, 4}, std::pair{12, 5}}) {
    const auto dep = dependency_degree_bound(n, s);
    REQUIRE(dep.exact == static_cast<double>(support::overlap_count_by_enumeration(n, s)));
    if (2 * s <= n) REQUIRE(dep.exact <= dep.bound);
  }
  CHECK_THROWS_AS(dependency_degree_bound(10, 1), std::domain_error);
  CHECK_THROWS_AS(dependency_degree_bound(10, 11), std::domain_error);
}

TEST_CASE("upper-tail bound") {
  CHECK(jr_tail_bound(2.5, 0.0, 3.0) == doctest::Approx(1.0));
  CHECK(jr_tail_bound(1.0, 3.0, 1.0) == doctest::Approx(std::pow(4.0, -0.75)).epsilon(1e-12));
  CHECK(jr_tail_bound(1.0, 3.0, 1.0) == doctest::Approx(0.3535533906).epsilon(1e-9));

  double previous = 1.0;
  for (double t = 0.0; t <= 20.0; t += 0.5) {
    const double b = jr_tail_bound(2.5, t, 3.0);
    REQUIRE(b <= previous + 1e-15);
    REQUIRE(b >= 0.0);
    REQUIRE(b <= 1.0);
    previous = b;
  }

  CHECK_THROWS_AS(jr_tail_bound(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(jr_tail_bound(1.0, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(jr_tail_bound(1.0, 1.0, 0.5), std::domain_error);
}

TEST_CASE("binomial helpers") {
  CHECK(choose_double(20, 3) == 1140.0);
  CHECK(choose_double(5, 0) == 1.0);
  CHECK(choose_double(5, 6) == 0.0);
  CHECK(log_choose(20, 3) == doctest::Approx(std::log(1140.0)).epsilon(1e-12));
}

TEST_SUITE_END();
