#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mucb/problem.hpp"
#include "mucb/rng.hpp"

namespace mucb {

// Inverse transform: -ln(u) / rate, for u in (0, 1].
double exponential_from_uniform(double u, double rate);

double sample_exponential(const ArmSpec& arm, RngStream& rng);

/// Under Rayleigh amplitude fading the instantaneous SNR is exponential with
/// the given mean.
ArmSpec from_rayleigh_snr(double mean_snr);

BanditProblem make_problem(std::span<const double> means);

/// One reward stream per arm for a given episode: arm k's j-th reward is a
/// function of (seed, episode, k, j) only. Two policies run on the same
/// (seed, episode) therefore see the same reward for the same (arm, pull).
class ExponentialEnvironment {
 public:
  ExponentialEnvironment(const BanditProblem& problem, std::uint64_t seed, std::uint64_t episode);

  double pull(std::size_t arm);

 private:
  std::vector<double> rates_;
  std::vector<RngStream> streams_;
};

}  // namespace mucb
