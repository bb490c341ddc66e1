#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mucb/extended_real.hpp"

namespace mucb {

/// Everything an index policy needs: the round counter t (total pulls so far),
/// per-arm pull counts and reward sums, and the exploration coefficient alpha.
struct PolicyState {
  std::uint64_t round = 0;
  std::vector<std::uint64_t> pulls;
  std::vector<double> reward_sums;
  double alpha = 0.0;

  static PolicyState initial(std::size_t num_arms, double alpha);

  [[nodiscard]] std::size_t num_arms() const { return pulls.size(); }

  // Throws InvalidArgument when an invariant is broken.
  void validate() const;

  // Defined only for arms pulled at least once.
  [[nodiscard]] double sample_mean(std::size_t arm) const;
};

struct ArmIndex {
  ExtendedReal scaling;  // M, in [1, +inf]
  ExtendedReal index;    // B, in [0, +inf]
  bool forced = false;   // M is infinite: the arm must be explored
};

struct IndexReport {
  std::vector<ArmIndex> arms;
  // Per-arm pull counts at the time the report was made; drives the
  // fewest-pulls rule among forced arms.
  std::vector<std::uint64_t> pulls;
};

/// Decision state (T, B) of one arm, ordered by the product order.
struct DecisionState {
  std::uint64_t pulls_count = 0;
  ExtendedReal index_value;

  // (T, B) >= (T', B') iff T >= T' and B >= B'. A partial order: both
  // dominates(a, b) and dominates(b, a) may be false.
  [[nodiscard]] bool dominates(const DecisionState& other) const {
    return pulls_count >= other.pulls_count && index_value >= other.index_value;
  }
};

/// M = 1 / max{0, 1 - sqrt(budget / pulls)} with 1/0 = +inf. The budget is
/// alpha * ln(t), passed pre-multiplied.
ExtendedReal scaling_factor(std::uint64_t pulls, double exploration_budget);

/// alpha * ln(round), with round 0 mapped to 0 (every arm is unplayed then).
double exploration_budget(double alpha, std::uint64_t round);

IndexReport compute_indexes(const PolicyState& state);

// Allocation-free variant for hot loops; `report` is resized as needed.
void compute_indexes_into(const PolicyState& state, IndexReport& report);

/// Forced arm with fewest pulls (lowest position on ties) if any arm is
/// forced, else the argmax of finite indexes (lowest position on ties).
std::size_t select_arm(const IndexReport& report);

PolicyState update_state(PolicyState state, std::size_t arm, double reward);
void apply_update(PolicyState& state, std::size_t arm, double reward);

/// UCB1 baseline: mean + sqrt(2 ln t / T), +inf for unplayed arms. Ignores alpha.
std::vector<ExtendedReal> ucb1_index(const PolicyState& state);

// Wraps UCB1 values in an IndexReport (forced == unplayed) so select_arm applies.
void ucb1_report_into(const PolicyState& state, IndexReport& report);

}  // namespace mucb
