#include "mucb/policy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mucb/errors.hpp"
#include "mucb/simd/kernels.hpp"

namespace mucb {

PolicyState PolicyState::initial(std::size_t num_arms, double alpha) {
  if (num_arms == 0) throw InvalidArgument("policy state needs at least one arm");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw InvalidArgument("alpha must be a finite nonnegative number, got " + std::to_string(alpha));
  PolicyState s;
  s.pulls.assign(num_arms, 0);
  s.reward_sums.assign(num_arms, 0.0);
  s.alpha = alpha;
  return s;
}

void PolicyState::validate() const {
  if (pulls.empty()) throw InvalidArgument("policy state has no arms");
  if (reward_sums.size() != pulls.size()) throw InvalidArgument("pulls and reward_sums differ in length");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be finite and >= 0");
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < pulls.size(); ++k) {
    total += pulls[k];
    if (!(reward_sums[k] >= 0.0) || !std::isfinite(reward_sums[k]))
      throw InvalidArgument("reward sum of arm " + std::to_string(k) + " must be finite and >= 0");
    if (pulls[k] == 0 && reward_sums[k] != 0.0)
      throw InvalidArgument("arm " + std::to_string(k) + " has rewards but no pulls");
  }
  if (total != round) throw InvalidArgument("sum of pulls differs from round counter");
}

double PolicyState::sample_mean(std::size_t arm) const {
  if (pulls.at(arm) == 0) throw InvalidArgument("sample mean of an unplayed arm is undefined");
  return reward_sums[arm] / static_cast<double>(pulls[arm]);
}

ExtendedReal scaling_factor(std::uint64_t pulls, double exploration_budget) {
  if (pulls == 0) throw InvalidArgument("scaling_factor: pulls must be >= 1 (unplayed arms are forced)");
  if (!(exploration_budget >= 0.0))
    throw InvalidArgument("scaling_factor: exploration budget must be >= 0");
  const double s = std::sqrt(exploration_budget / static_cast<double>(pulls));
  if (s >= 1.0) return ExtendedReal::infinity();
  return ExtendedReal(1.0 / (1.0 - s));
}

double exploration_budget(double alpha, std::uint64_t round) {
  if (round == 0) return 0.0;
  return alpha * std::log(static_cast<double>(round));
}

namespace {

struct Scratch {
  std::vector<double> pulls, scaling, index;
  std::vector<std::uint8_t> forced;

  void resize(std::size_t n) {
    pulls.resize(n);
    scaling.resize(n);
    index.resize(n);
    forced.resize(n);
  }
};

thread_local Scratch scratch;

}  // namespace

void compute_indexes_into(const PolicyState& state, IndexReport& report) {
  const std::size_t n = state.num_arms();
  scratch.resize(n);
  for (std::size_t k = 0; k < n; ++k) scratch.pulls[k] = static_cast<double>(state.pulls[k]);

  const double budget = exploration_budget(state.alpha, state.round);
  simd::kernels().mucb_indexes(scratch.pulls.data(), state.reward_sums.data(), budget,
                               scratch.scaling.data(), scratch.index.data(), scratch.forced.data(), n);

  report.arms.resize(n);
  report.pulls.assign(state.pulls.begin(), state.pulls.end());
  for (std::size_t k = 0; k < n; ++k) {
    report.arms[k].forced = scratch.forced[k] != 0;
    report.arms[k].scaling = ExtendedReal(scratch.scaling[k]);
    report.arms[k].index = ExtendedReal(scratch.index[k]);
  }
}

IndexReport compute_indexes(const PolicyState& state) {
  state.validate();
  IndexReport report;
  compute_indexes_into(state, report);
  return report;
}

std::size_t select_arm(const IndexReport& report) {
  if (report.arms.empty()) throw InvalidArgument("select_arm: empty report");
  const std::size_t n = report.arms.size();
  const bool have_pulls = report.pulls.size() == n;

  std::size_t best = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (!report.arms[k].forced) continue;
    if (best == n || (have_pulls && report.pulls[k] < report.pulls[best])) best = k;
  }
  if (best != n) return best;

  best = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (report.arms[k].index > report.arms[best].index) best = k;
  return best;
}

void apply_update(PolicyState& state, std::size_t arm, double reward) {
  if (arm >= state.num_arms())
    throw InvalidArgument("update_state: arm " + std::to_string(arm) + " out of range");
  if (!(reward >= 0.0) || !std::isfinite(reward))
    throw InvalidArgument("update_state: reward must be finite and >= 0, got " + std::to_string(reward));
  ++state.pulls[arm];
  state.reward_sums[arm] += reward;
  ++state.round;
}

PolicyState update_state(PolicyState state, std::size_t arm, double reward) {
  apply_update(state, arm, reward);
  return state;
}

void ucb1_report_into(const PolicyState& state, IndexReport& report) {
  const std::size_t n = state.num_arms();
  scratch.resize(n);
  for (std::size_t k = 0; k < n; ++k) scratch.pulls[k] = static_cast<double>(state.pulls[k]);
  const double log_t = state.round == 0 ? 0.0 : std::log(static_cast<double>(state.round));
  simd::kernels().ucb1_indexes(scratch.pulls.data(), state.reward_sums.data(), log_t,
                               scratch.index.data(), n);

  report.arms.resize(n);
  report.pulls.assign(state.pulls.begin(), state.pulls.end());
  for (std::size_t k = 0; k < n; ++k) {
    const bool unplayed = state.pulls[k] == 0;
    report.arms[k].forced = unplayed;
    report.arms[k].scaling = unplayed ? ExtendedReal::infinity() : ExtendedReal(1.0);
    report.arms[k].index = ExtendedReal(scratch.index[k]);
  }
}

std::vector<ExtendedReal> ucb1_index(const PolicyState& state) {
  state.validate();
  IndexReport report;
  ucb1_report_into(state, report);
  std::vector<ExtendedReal> out;
  out.reserve(report.arms.size());
  for (const auto& a : report.arms) out.push_back(a.index);
  return out;
}

}  // namespace mucb
