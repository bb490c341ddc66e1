#include <doctest.h>

#include <cmath>
#include <random>

#include "mucb/analysis.hpp"
#include "mucb/env.hpp"
#include "mucb/errors.hpp"

using namespace mucb;

namespace {
BanditProblem problem_of(std::vector<double> means) { return make_problem(means); }
}  // namespace

TEST_CASE("pseudo_regret") {
  const auto p = problem_of({1.0, 0.5});
  CHECK(pseudo_regret(p, std::vector<std::uint64_t>{90, 10}) == 5.0);
  CHECK(pseudo_regret(p, std::vector<std::uint64_t>{100, 0}) == 0.0);
  CHECK(pseudo_regret(problem_of({1.0, 0.5, 0.25}), std::vector<std::uint64_t>{8, 1, 1}) == 1.25);
  CHECK(pseudo_regret(problem_of({2.0, 2.0, 1.0}), std::vector<std::uint64_t>{4, 9, 0}) == 0.0);
  CHECK_THROWS_AS(pseudo_regret(p, std::vector<std::uint64_t>{1}), InvalidArgument);
}

TEST_CASE("realized_regret") {
  const auto p = problem_of({1.0, 0.5});
  CHECK(realized_regret(p, std::vector<double>{0.5, 0.5, 2.0}) == 0.0);
  std::vector<double> r(10, 0.7);
  CHECK(realized_regret(p, r) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(realized_regret(p, std::vector<double>{5.0}) == -4.0);
  CHECK_THROWS_AS(realized_regret(p, std::vector<double>{}), InvalidArgument);
}

TEST_CASE("theorem1_bound") {
  CHECK(theorem1_bound_log(problem_of({1.0, 0.5}), 5.0, 1.0) == 40.0);
  CHECK(theorem1_bound_log(problem_of({1.0, 0.5, 0.75}), 5.0, 1.0) == 120.0);
  CHECK(theorem1_bound(problem_of({1.0, 0.5}), 4.5, 1000) == doctest::Approx(36.0 * std::log(1000.0)));
  CHECK_THROWS_AS(theorem1_bound(problem_of({1.0, 0.5}), 4.0, 100), HypothesisViolation);
  CHECK_THROWS_AS(theorem1_bound(problem_of({1.0, 0.5}), 4.5, 1), InvalidArgument);

  SUBCASE("additive over arms, linear in alpha and ln t") {
    const auto a = problem_of({2.0, 0.4});
    const auto b = problem_of({2.0, 1.1});
    const auto ab = problem_of({2.0, 0.4, 1.1});
    const double lt = std::log(12345.0);
    CHECK(theorem1_bound_log(ab, 6.0, lt) ==
          doctest::Approx(theorem1_bound_log(a, 6.0, lt) + theorem1_bound_log(b, 6.0, lt)));
    CHECK(theorem1_bound_log(ab, 9.0, lt) == doctest::Approx(1.5 * theorem1_bound_log(ab, 6.0, lt)));
    CHECK(theorem1_bound_log(ab, 6.0, 2 * lt) == doctest::Approx(2.0 * theorem1_bound_log(ab, 6.0, lt)));
  }
}

TEST_CASE("u_threshold") {
  CHECK(u_threshold_log(0.5, 5.0, 1.0) == 80);
  CHECK(u_threshold_log(0.5, 5.0, 1.1) == 88);
  CHECK(u_threshold(0.5, 4.5, 100) == static_cast<std::uint64_t>(std::ceil(72.0 * std::log(100.0))));
  CHECK_THROWS_AS(u_threshold(1.0, 5.0, 100), InvalidArgument);
  CHECK_THROWS_AS(u_threshold(0.5, 0.0, 100), InvalidArgument);

  SUBCASE("nondecreasing in alpha and t") {
    for (std::uint64_t t = 2; t < 100000; t *= 3)
      for (double a = 0.5; a < 10; a += 0.5) {
        CHECK(u_threshold(0.3, a + 0.5, t) >= u_threshold(0.3, a, t));
        CHECK(u_threshold(0.3, a, t * 3) >= u_threshold(0.3, a, t));
      }
  }
  SUBCASE("recomputable from the problem") {
    const auto p = problem_of({1.0, 0.5, 0.9});
    const auto params = AnomalyParams::for_problem(p, 4.5, 1000);
    REQUIRE(params.arms == std::vector<std::size_t>{1, 2});
    CHECK(params.u_values[0] == u_threshold(0.5, 4.5, 1000));
    CHECK(params.u_values[1] == u_threshold(p.ratios()[2], 4.5, 1000));
  }
}

TEST_CASE("anomaly detectors") {
  CHECK(detect_anomaly1({100, ExtendedReal(1.2)}, 80, 1.0));
  CHECK_FALSE(detect_anomaly1({50, ExtendedReal(1.2)}, 80, 1.0));
  CHECK_FALSE(detect_anomaly1({100, ExtendedReal(0.9)}, 80, 1.0));
  CHECK(detect_anomaly1({80, ExtendedReal(1.0)}, 80, 1.0));
  CHECK(detect_anomaly1({100, ExtendedReal::infinity()}, 80, 1.0));

  CHECK(detect_anomaly2({5, ExtendedReal(0.8)}, 1.0));
  CHECK_FALSE(detect_anomaly2({0, ExtendedReal::infinity()}, 1.0));
  CHECK_FALSE(detect_anomaly2({5, ExtendedReal(1.0)}, 1.0));
  CHECK_FALSE(detect_anomaly2({5, ExtendedReal::infinity()}, 1.0));

  SUBCASE("agree with brute-force product-order evaluation") {
    std::mt19937_64 gen(99);
    std::uniform_int_distribution<std::uint64_t> T(0, 200);
    std::uniform_real_distribution<double> B(0.0, 2.0);
    for (int i = 0; i < 5000; ++i) {
      const std::uint64_t t = T(gen), u = T(gen);
      const double b = B(gen), mu = B(gen) + 0.01;
      const bool inf = i % 10 == 0;
      const ExtendedReal idx = inf ? ExtendedReal::infinity() : ExtendedReal(b);
      const double bv = inf ? INFINITY : b;
      CHECK(detect_anomaly1({t, idx}, u, mu) == (t >= u && bv >= mu));
      CHECK(detect_anomaly2({t, idx}, mu) == (t >= 1 && bv < mu));
    }
  }
}

TEST_CASE("anomaly_envelope") {
  CHECK(anomaly_envelope(100, 4.5) == doctest::Approx(3.1622776601683795e-3).epsilon(1e-12));
  CHECK(anomaly_envelope(10, 4.0) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(anomaly_envelope(1000, 2.0) == 1.0);
  CHECK(anomaly_envelope(10, 1.0) > 1.0);
  CHECK_THROWS_AS(anomaly_envelope(1, 4.5), InvalidArgument);
}

TEST_CASE("rate function and minorant") {
  CHECK(rate_function(1.0, 1.0) == 0.0);
  CHECK(rate_function(3.0, 3.0) == 0.0);
  CHECK(rate_function(2.0, 1.0) == doctest::Approx(0.306853).epsilon(1e-6));
  CHECK(rate_function(0.5, 1.0) == doctest::Approx(0.193147).epsilon(1e-6));
  CHECK(rate_minorant(2.0, 1.0) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(rate_minorant(1.0, 1.0) == 0.0);
  CHECK(rate_minorant(0.5, 1.0) == 0.1875);
  CHECK_THROWS_AS(rate_function(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(rate_minorant(-1.0, 1.0), InvalidArgument);

  SUBCASE("minorant never exceeds the rate function, touching only at r = 1") {
    for (int i = 1; i <= 100; ++i) {
      const double r = i * 0.05;
      const double diff = rate_function(r, 1.0) - rate_minorant(r, 1.0);
      CHECK(diff >= 0.0);
      if (i != 20) CHECK(diff > 1e-12);
    }
  }
  SUBCASE("strictly decreasing below the mean, strictly increasing above") {
    for (int i = 1; i < 100; ++i) {
      const double r0 = i * 0.01, r1 = (i + 1) * 0.01;
      CHECK(rate_function(r1, 1.0) < rate_function(r0, 1.0));
      CHECK(rate_function(1.0 + r1, 1.0) > rate_function(1.0 + r0, 1.0));
    }
  }
  SUBCASE("scale invariance in the ratio") {
    CHECK(rate_function(6.0, 3.0) == doctest::Approx(rate_function(2.0, 1.0)));
  }
}

TEST_CASE("chernoff_tail_bound") {
  CHECK(chernoff_tail_bound(10, 2.0, 1.0, TailSide::upper) == doctest::Approx(4.6489528e-2).epsilon(1e-7));
  CHECK(chernoff_tail_bound(1, 1.0 + 1e-9, 1.0, TailSide::upper) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(chernoff_tail_bound(1, 1.0 - 1e-9, 1.0, TailSide::lower) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(chernoff_tail_bound(0, 2.0, 1.0, TailSide::upper), InvalidArgument);
  CHECK_THROWS_AS(chernoff_tail_bound(3, 0.5, 1.0, TailSide::upper), InvalidArgument);
  CHECK_THROWS_AS(chernoff_tail_bound(3, 1.5, 1.0, TailSide::lower), InvalidArgument);
  CHECK_THROWS_AS(chernoff_tail_bound(3, 1.0, 1.0, TailSide::upper), InvalidArgument);

  SUBCASE("dominates the exact Gamma tail on both sides") {
    for (std::uint64_t n = 1; n <= 50; ++n)
      for (int i = 1; i <= 50; ++i) {
        if (i == 10) continue;
        const double beta = i / 10.0;
        const TailSide side = beta > 1.0 ? TailSide::upper : TailSide::lower;
        CHECK(exact_gamma_tail(n, beta, 1.0, side) <= chernoff_tail_bound(n, beta, 1.0, side));
      }
  }
}
