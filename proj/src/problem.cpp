#include "mucb/problem.hpp"

#include <cmath>
#include <string>

#include "mucb/errors.hpp"

namespace mucb {

ArmSpec ArmSpec::from_mean(double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean))
    throw InvalidArgument("arm mean must be positive and finite, got " + std::to_string(mean));
  return ArmSpec(1.0 / mean, mean);
}

ArmSpec ArmSpec::from_rate(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw InvalidArgument("arm rate must be positive and finite, got " + std::to_string(rate));
  return ArmSpec(rate, 1.0 / rate);
}

BanditProblem::BanditProblem(std::vector<ArmSpec> arms) : arms_(std::move(arms)) {
  if (arms_.size() < 2)
    throw InvalidArgument("a bandit problem needs at least 2 arms, got " + std::to_string(arms_.size()));
  for (std::size_t k = 0; k < arms_.size(); ++k) {
    if (arms_[k].mean() > best_mean_) {
      best_mean_ = arms_[k].mean();
      best_index_ = k;
    }
  }
  gaps_.reserve(arms_.size());
  ratios_.reserve(arms_.size());
  for (const auto& a : arms_) {
    ratios_.push_back(a.mean() / best_mean_);
    gaps_.push_back(best_mean_ - a.mean());
  }
}

std::vector<std::size_t> BanditProblem::suboptimal_arms() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < gaps_.size(); ++k)
    if (gaps_[k] > 0.0) out.push_back(k);
  return out;
}

}  // namespace mucb
