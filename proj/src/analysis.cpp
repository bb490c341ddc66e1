#include "mucb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mucb/errors.hpp"
#include "mucb/gamma.hpp"

namespace mucb {

double pseudo_regret(const BanditProblem& problem, std::span<const std::uint64_t> pulls) {
  if (pulls.size() != problem.num_arms()) throw InvalidArgument("pseudo_regret: pulls length != K");
  double r = 0.0;
  for (std::size_t k = 0; k < pulls.size(); ++k)
    if (problem.gaps()[k] > 0.0) r += problem.gaps()[k] * static_cast<double>(pulls[k]);
  return r;
}

double realized_regret(const BanditProblem& problem, std::span<const double> rewards) {
  if (rewards.empty()) throw InvalidArgument("realized_regret: empty trace");
  double collected = 0.0;
  for (double r : rewards) collected += r;
  return static_cast<double>(rewards.size()) * problem.best_mean() - collected;
}

double theorem1_bound_log(const BanditProblem& problem, double alpha, double log_t) {
  if (!(alpha > 4.0))
    throw HypothesisViolation("the regret bound requires alpha > 4, got alpha=" + std::to_string(alpha));
  double total = 0.0;
  for (std::size_t k : problem.suboptimal_arms())
    total += 4.0 * problem.best_mean() * alpha * log_t / (1.0 - problem.ratios()[k]);
  return total;
}

double theorem1_bound(const BanditProblem& problem, double alpha, std::uint64_t t) {
  if (t < 2) throw InvalidArgument("theorem1_bound: t must be >= 2");
  return theorem1_bound_log(problem, alpha, std::log(static_cast<double>(t)));
}

std::uint64_t u_threshold_log(double ratio, double alpha, double log_t) {
  if (!(ratio > 0.0 && ratio < 1.0))
    throw InvalidArgument("u_threshold: ratio must lie in (0, 1); the optimal arm has no threshold");
  if (!(alpha > 0.0)) throw InvalidArgument("u_threshold: alpha must be positive");
  const double gap = 1.0 - ratio;
  return static_cast<std::uint64_t>(std::ceil(4.0 * alpha * log_t / (gap * gap)));
}

std::uint64_t u_threshold(double ratio, double alpha, std::uint64_t t) {
  if (t < 2) throw InvalidArgument("u_threshold: t must be >= 2");
  return u_threshold_log(ratio, alpha, std::log(static_cast<double>(t)));
}

AnomalyParams AnomalyParams::for_problem(const BanditProblem& problem, double alpha, std::uint64_t t) {
  AnomalyParams p;
  p.alpha = alpha;
  p.t = t;
  p.arms = problem.suboptimal_arms();
  for (std::size_t k : p.arms) p.u_values.push_back(u_threshold(problem.ratios()[k], alpha, t));
  return p;
}

bool detect_anomaly1(const DecisionState& state, std::uint64_t u_k, double best_mean) {
  return state.dominates(DecisionState{u_k, ExtendedReal(best_mean)});
}

bool detect_anomaly2(const DecisionState& state, double best_mean) {
  return state.pulls_count >= 1 && state.index_value < ExtendedReal(best_mean);
}

double anomaly_envelope(std::uint64_t t, double alpha) {
  if (t < 2) throw InvalidArgument("anomaly_envelope: t must be >= 2");
  return std::pow(static_cast<double>(t), 1.0 - alpha / 2.0);
}

namespace {

double checked_ratio(double beta, double mean) {
  if (!(beta > 0.0)) throw InvalidArgument("rate function: beta must be positive");
  if (!(mean > 0.0)) throw InvalidArgument("rate function: mean must be positive");
  return beta / mean;
}

}  // namespace

double rate_function(double beta, double mean) {
  const double r = checked_ratio(beta, mean);
  return r - 1.0 - std::log(r);
}

double rate_minorant(double beta, double mean) {
  const double r = checked_ratio(beta, mean);
  const double d = 1.0 - r;
  return (3.0 * (d * d)) / (2.0 * (1.0 + 2.0 * r));
}

double chernoff_tail_bound(std::uint64_t n, double beta, double mean, TailSide side) {
  if (n == 0) throw InvalidArgument("chernoff_tail_bound: n must be >= 1");
  if (side == TailSide::upper && !(beta > mean))
    throw InvalidArgument("chernoff_tail_bound: upper tail needs beta > mean");
  if (side == TailSide::lower && !(beta < mean))
    throw InvalidArgument("chernoff_tail_bound: lower tail needs beta < mean");
  return std::min(1.0, std::exp(-rate_function(beta, mean) * static_cast<double>(n)));
}

double exact_gamma_tail(std::uint64_t n, double threshold, double rate, TailSide side) {
  if (n == 0) throw InvalidArgument("exact_gamma_tail: n must be >= 1");
  if (!(threshold > 0.0)) throw InvalidArgument("exact_gamma_tail: threshold must be positive");
  if (!(rate > 0.0)) throw InvalidArgument("exact_gamma_tail: rate must be positive");
  const double shape = static_cast<double>(n);
  const double x = shape * threshold * rate;
  return side == TailSide::upper ? gamma_q(shape, x) : gamma_p(shape, x);
}

}  // namespace mucb
