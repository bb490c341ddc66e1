#include "mucb/env.hpp"

#include <cmath>
#include <string>

#include "mucb/errors.hpp"

namespace mucb {

double exponential_from_uniform(double u, double rate) {
  if (!(u > 0.0 && u <= 1.0)) throw InvalidArgument("uniform draw must lie in (0, 1]");
  return -std::log(u) / rate;
}

double sample_exponential(const ArmSpec& arm, RngStream& rng) {
  return exponential_from_uniform(rng.next_uniform(), arm.rate());
}

ArmSpec from_rayleigh_snr(double mean_snr) {
  if (!(mean_snr > 0.0)) throw InvalidArgument("mean SNR must be positive, got " + std::to_string(mean_snr));
  return ArmSpec::from_mean(mean_snr);
}

BanditProblem make_problem(std::span<const double> means) {
  if (means.size() < 2)
    throw InvalidArgument("need at least 2 arm means, got " + std::to_string(means.size()));
  std::vector<ArmSpec> arms;
  arms.reserve(means.size());
  for (double m : means) arms.push_back(ArmSpec::from_mean(m));
  return BanditProblem(std::move(arms));
}

ExponentialEnvironment::ExponentialEnvironment(const BanditProblem& problem, std::uint64_t seed,
                                               std::uint64_t episode) {
  rates_.reserve(problem.num_arms());
  streams_.reserve(problem.num_arms());
  for (std::size_t k = 0; k < problem.num_arms(); ++k) {
    rates_.push_back(problem.arm(k).rate());
    streams_.emplace_back(seed, episode, static_cast<std::uint32_t>(k));
  }
}

double ExponentialEnvironment::pull(std::size_t arm) {
  return exponential_from_uniform(streams_.at(arm).next_uniform(), rates_[arm]);
}

}  // namespace mucb
