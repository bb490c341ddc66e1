#include <doctest.h>

#include <cmath>

#include "mucb/analysis.hpp"
#include "mucb/env.hpp"
#include "mucb/errors.hpp"
#include "mucb/gamma.hpp"
#include "mucb/rng.hpp"

using namespace mucb;

namespace {

// Erlang tail: Q(n, x) = sum_{j<n} x^j e^{-x} / j!, each term in log space.
double erlang_upper(int n, double x) {
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += std::exp(j * std::log(x) - x - std::lgamma(j + 1.0));
  return s;
}

}  // namespace

TEST_CASE("integer shapes match the Erlang closed form") {
  for (int n = 1; n <= 60; ++n) {
    for (double x : {0.01, 0.3, 1.0, 2.5, 7.0, 15.0, 33.0, 60.0, 90.0, 150.0, 300.0}) {
      CAPTURE(n);
      CAPTURE(x);
      const double q = erlang_upper(n, x);
      CHECK(std::abs(gamma_q(n, x) - q) <= 1e-12 + 1e-10 * q);
      CHECK(std::abs(gamma_p(n, x) - (1.0 - q)) <= 1e-10);
    }
  }
}

TEST_CASE("half-integer shape matches erfc") {
  for (double x : {1e-4, 0.1, 0.5, 1.0, 2.0, 5.0, 12.0, 40.0}) {
    CAPTURE(x);
    const double q = std::erfc(std::sqrt(x));
    CHECK(std::abs(gamma_q(0.5, x) - q) <= 1e-10 * q + 1e-15);
  }
}

TEST_CASE("boundary arguments") {
  CHECK(gamma_p(3.0, 0.0) == 0.0);
  CHECK(gamma_q(3.0, 0.0) == 1.0);
  CHECK(gamma_q(3.0, INFINITY) == 0.0);
  CHECK_THROWS_AS(gamma_p(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(gamma_q(2.0, -1.0), InvalidArgument);
}

TEST_CASE("exact_gamma_tail") {
  CHECK(exact_gamma_tail(1, 1.0, 1.0, TailSide::upper) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(exact_gamma_tail(2, 1.0, 1.0, TailSide::upper) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-12));
  CHECK(exact_gamma_tail(2, 1.0, 1.0, TailSide::upper) == doctest::Approx(0.406006).epsilon(1e-6));
  for (std::uint64_t n : {1, 7, 50}) CHECK(exact_gamma_tail(n, 1e-300, 1.0, TailSide::upper) == 1.0);
  CHECK(exact_gamma_tail(10, 2.0, 1.0, TailSide::upper) == doctest::Approx(4.995412308e-3).epsilon(1e-8));
  CHECK_THROWS_AS(exact_gamma_tail(0, 1.0, 1.0, TailSide::upper), InvalidArgument);
  CHECK_THROWS_AS(exact_gamma_tail(3, 0.0, 1.0, TailSide::upper), InvalidArgument);
  CHECK_THROWS_AS(exact_gamma_tail(3, 1.0, -1.0, TailSide::lower), InvalidArgument);

  SUBCASE("upper and lower tails are complementary") {
    for (std::uint64_t n : {1, 3, 12, 40})
      for (double beta : {0.2, 0.9, 1.3, 2.2}) {
        const double sum = exact_gamma_tail(n, beta, 1.5, TailSide::upper) +
                           exact_gamma_tail(n, beta, 1.5, TailSide::lower);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      }
  }
}

TEST_CASE("sample-mean tail agrees with a 1e6-path Monte Carlo") {
  const ArmSpec arm = ArmSpec::from_rate(1.0);
  RngStream rng(2718, 0);
  const int paths = 1000000;
  int hits = 0;
  for (int i = 0; i < paths; ++i) {
    double s = 0.0;
    for (int j = 0; j < 10; ++j) s += sample_exponential(arm, rng);
    hits += (s / 10.0 >= 2.0);
  }
  const double p = exact_gamma_tail(10, 2.0, 1.0, TailSide::upper);
  const double se = std::sqrt(p * (1.0 - p) / paths);
  CHECK(std::abs(static_cast<double>(hits) / paths - p) <= 4.0 * se);
  CHECK(p <= chernoff_tail_bound(10, 2.0, 1.0, TailSide::upper));
}
