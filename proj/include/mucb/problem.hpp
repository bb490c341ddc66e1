#pragma once

#include <cstddef>
#include <vector>

namespace mucb {

/// Exponential reward distribution with density rate * exp(-rate * x), x >= 0.
class ArmSpec {
 public:
  static ArmSpec from_mean(double mean);
  static ArmSpec from_rate(double rate);

  [[nodiscard]] double rate() const { return rate_; }
  [[nodiscard]] double mean() const { return mean_; }

 private:
  ArmSpec(double rate, double mean) : rate_(rate), mean_(mean) {}
  double rate_;
  double mean_;
};

/// A K-armed exponential bandit (K >= 2) with its derived quantities:
/// best mean, per-arm gaps (best - mean) and ratios (mean / best).
/// The best arm is the first position holding the maximal mean.
class BanditProblem {
 public:
  explicit BanditProblem(std::vector<ArmSpec> arms);

  [[nodiscard]] std::size_t num_arms() const { return arms_.size(); }
  [[nodiscard]] const std::vector<ArmSpec>& arms() const { return arms_; }
  [[nodiscard]] const ArmSpec& arm(std::size_t k) const { return arms_.at(k); }
  [[nodiscard]] std::size_t best_index() const { return best_index_; }
  [[nodiscard]] double best_mean() const { return best_mean_; }
  [[nodiscard]] const std::vector<double>& gaps() const { return gaps_; }
  [[nodiscard]] const std::vector<double>& ratios() const { return ratios_; }

  // Arms with a strictly positive gap, in position order.
  [[nodiscard]] std::vector<std::size_t> suboptimal_arms() const;

 private:
  std::vector<ArmSpec> arms_;
  std::size_t best_index_ = 0;
  double best_mean_ = 0.0;
  std::vector<double> gaps_;
  std::vector<double> ratios_;
};

}  // namespace mucb
