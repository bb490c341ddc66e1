#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mucb/policy.hpp"
#include "mucb/problem.hpp"

namespace mucb {

enum class PolicyKind { mucb, ucb1 };

std::string_view policy_name(PolicyKind kind);

struct ExperimentConfig {
  std::vector<double> means;
  double alpha = 4.5;
  std::uint64_t horizon = 100000;
  std::uint64_t runs = 200;
  std::uint64_t seed = 42;
  std::vector<std::uint64_t> checkpoints;  // empty: default geometric grid
  PolicyKind policy = PolicyKind::mucb;
  unsigned threads = 1;                    // 0: one per hardware thread

  // Throws InvalidArgument naming the offending field.
  void validate() const;

  // Explicit checkpoints, or the default grid when none were given.
  [[nodiscard]] std::vector<std::uint64_t> resolved_checkpoints() const;
};

/// Half-decade grid round(10^1), round(10^1.5), ... not exceeding the
/// horizon, always ending with the horizon itself.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon);

struct CheckpointRecord {
  std::uint64_t t = 0;
  std::vector<std::uint64_t> pulls;
  double pseudo_regret = 0.0;
  // One flag per suboptimal arm (BanditProblem::suboptimal_arms order).
  std::vector<std::uint8_t> anomaly1;
  bool anomaly2 = false;
  // False where the anomaly events are not evaluated (t < 2 or alpha == 0).
  bool anomalies_evaluated = false;
};

/// History of one episode. choices/rewards are the full H_t when history
/// recording is on and empty otherwise; checkpoints are always recorded.
struct EpisodeTrace {
  std::uint64_t episode_id = 0;
  std::vector<std::uint32_t> choices;
  std::vector<double> rewards;
  std::vector<CheckpointRecord> checkpoints;
};

struct RoundView {
  std::uint64_t round;
  const PolicyState& state;
  const IndexReport& report;
  std::size_t chosen;
  double reward;
};

using RoundObserver = std::function<void(const RoundView&)>;

struct EpisodeOptions {
  bool record_history = true;
  RoundObserver observer;  // called once per round after the reward is drawn
};

EpisodeTrace run_episode(const ExperimentConfig& config, std::uint64_t episode_id,
                         const EpisodeOptions& options = {});

// Supplies the reward for (arm, per-arm pull index).
using RewardSource = std::function<double(std::size_t arm, std::uint64_t pull_index)>;

/// Plays `rounds` rounds of a policy against an arbitrary reward source and
/// returns the arm-choice sequence. Used to replay recorded reward streams.
std::vector<std::uint32_t> play(std::size_t num_arms, double alpha, PolicyKind policy,
                                std::uint64_t rounds, const RewardSource& source,
                                const RoundObserver& observer = {});

struct AnomalyFrequency {
  std::uint64_t t = 0;
  std::size_t arm = 0;
  int anomaly_type = 1;
  double frequency = 0.0;
  double std_error = 0.0;
  std::optional<std::uint64_t> u_value;  // type 1 only
  double envelope = 0.0;
};

struct CheckpointSummary {
  std::uint64_t t = 0;
  double mean_regret = 0.0;
  double stderr_regret = 0.0;
  std::optional<double> theorem1_bound;  // absent when alpha <= 4 or t < 2
};

struct AggregateResult {
  PolicyKind policy = PolicyKind::mucb;
  std::uint64_t runs = 0;
  std::vector<CheckpointSummary> regret;
  std::vector<AnomalyFrequency> anomalies;
};

/// Fraction of traces whose anomaly flags fired at each evaluated
/// checkpoint, with binomial standard errors sqrt(p(1-p)/runs).
std::vector<AnomalyFrequency> anomaly_frequencies(std::span<const EpisodeTrace> traces,
                                                  const BanditProblem& problem, double alpha);

/// Folds traces in episode_id order, whatever order they are given in.
AggregateResult aggregate(const ExperimentConfig& config, std::span<const EpisodeTrace> traces);

/// Runs episodes 0..runs-1 (in parallel when config.threads != 1) and
/// aggregates them. The result does not depend on the thread count.
AggregateResult run_experiment(const ExperimentConfig& config);

// Checkpoint-only traces for every episode, indexed by episode id.
std::vector<EpisodeTrace> run_episodes(const ExperimentConfig& config);

}  // namespace mucb
