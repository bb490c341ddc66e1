#pragma once

#include <cstdint>
#include <vector>

#include "mucb/analysis.hpp"

namespace mucb {

/// Grid for checking the large-deviation inequalities of the sample mean of
/// Exp(rate) rewards against exact Gamma tails and Monte Carlo.
struct LdiGrid {
  double rate = 1.0;
  std::vector<std::uint64_t> ns{5, 10, 20};
  std::vector<double> betas{1.5, 2.0, 3.0};
  std::uint64_t mc_samples = 100000;
  std::uint64_t seed = 42;

  void validate() const;
};

struct LdiRow {
  std::uint64_t n = 0;
  double beta = 0.0;
  TailSide side = TailSide::upper;  // upper for beta >= mean, lower otherwise
  double exact_tail = 0.0;
  double chernoff_bound = 1.0;      // 1 at beta == mean
  double mc_estimate = 0.0;
  double mc_stderr = 0.0;           // sqrt(p(1-p)/samples) at the MC estimate
  double minorant = 0.0;
  double rate_value = 0.0;
};

/// One row per (n, beta), n-major in grid order. Monte Carlo sample means are
/// built as running sums along mc_samples independent paths, so all n share
/// one set of paths; path j's s-th draw comes from stream (seed, s).
std::vector<LdiRow> ldi_table(const LdiGrid& grid);

}  // namespace mucb
