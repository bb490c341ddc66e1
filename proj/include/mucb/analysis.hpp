#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mucb/policy.hpp"
#include "mucb/problem.hpp"

namespace mucb {

enum class TailSide { upper, lower };

// Sum over suboptimal arms of gap * pulls.
double pseudo_regret(const BanditProblem& problem, std::span<const std::uint64_t> pulls);

// t * best_mean - sum of collected rewards. Can be negative on lucky traces.
double realized_regret(const BanditProblem& problem, std::span<const double> rewards);

/// Leading term of the MUCB regret bound,
///   sum_{k: gap_k > 0} 4 * best_mean * alpha * ln(t) / (1 - ratio_k).
/// The o(ln t) remainder is not included. Throws HypothesisViolation when
/// alpha <= 4.
double theorem1_bound(const BanditProblem& problem, double alpha, std::uint64_t t);

// Same, with ln(t) supplied directly.
double theorem1_bound_log(const BanditProblem& problem, double alpha, double log_t);

/// ceil(4 * alpha * ln(t) / (1 - ratio)^2): pull count beyond which a
/// suboptimal arm's over-estimation decays geometrically.
std::uint64_t u_threshold(double ratio, double alpha, std::uint64_t t);
std::uint64_t u_threshold_log(double ratio, double alpha, double log_t);

/// Per-suboptimal-arm thresholds at a reference round t.
struct AnomalyParams {
  std::vector<std::size_t> arms;           // suboptimal arm positions
  std::vector<std::uint64_t> u_values;     // threshold per entry of `arms`
  double alpha = 0.0;
  std::uint64_t t = 0;

  static AnomalyParams for_problem(const BanditProblem& problem, double alpha, std::uint64_t t);
};

// Suboptimal arm is well sampled and over-estimated: (T, B) >= (u_k, best_mean).
bool detect_anomaly1(const DecisionState& state, std::uint64_t u_k, double best_mean);

// Optimal arm is sampled and under-estimated: T >= 1 and B < best_mean.
bool detect_anomaly2(const DecisionState& state, double best_mean);

// t^(1 - alpha/2). Values above 1 are returned unchanged.
double anomaly_envelope(std::uint64_t t, double alpha);

/// Exponential-family rate function r - 1 - ln r with r = beta / mean.
double rate_function(double beta, double mean);

/// Quadratic minorant 3(1 - r)^2 / (2(1 + 2r)) of rate_function.
double rate_minorant(double beta, double mean);

/// min(1, exp(-n * rate_function(beta, mean))). Upper side needs beta > mean,
/// lower side needs beta < mean.
double chernoff_tail_bound(std::uint64_t n, double beta, double mean, TailSide side);

/// P(sample mean of n Exp(rate) draws >= threshold) (upper) or <= threshold
/// (lower), from the Gamma(n, rate) law of the sum.
double exact_gamma_tail(std::uint64_t n, double threshold, double rate, TailSide side);

}  // namespace mucb
