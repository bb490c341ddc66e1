#include "mucb/ldi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mucb/env.hpp"
#include "mucb/errors.hpp"
#include "mucb/rng.hpp"
#include "mucb/simd/kernels.hpp"

namespace mucb {

void LdiGrid::validate() const {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw InvalidArgument("rate: must be positive and finite");
  if (ns.empty()) throw InvalidArgument("ns: grid is empty");
  for (auto n : ns)
    if (n < 1) throw InvalidArgument("ns: sample sizes must be >= 1");
  if (betas.empty()) throw InvalidArgument("betas: grid is empty");
  for (double b : betas)
    if (!(b > 0.0) || !std::isfinite(b)) throw InvalidArgument("betas: thresholds must be positive and finite");
  if (mc_samples < 1) throw InvalidArgument("mc-samples: must be >= 1");
}

std::vector<LdiRow> ldi_table(const LdiGrid& grid) {
  grid.validate();
  const double mean = 1.0 / grid.rate;
  const std::uint64_t max_n = *std::max_element(grid.ns.begin(), grid.ns.end());
  const std::size_t samples = grid.mc_samples;
  const auto& k = simd::kernels();

  std::vector<LdiRow> rows;
  rows.reserve(grid.ns.size() * grid.betas.size());
  for (auto n : grid.ns) {
    for (double beta : grid.betas) {
      LdiRow row;
      row.n = n;
      row.beta = beta;
      row.side = beta >= mean ? TailSide::upper : TailSide::lower;
      row.exact_tail = exact_gamma_tail(n, beta, grid.rate, row.side);
      row.chernoff_bound = beta == mean ? 1.0 : chernoff_tail_bound(n, beta, mean, row.side);
      row.rate_value = rate_function(beta, mean);
      rows.push_back(row);
    }
  }

  std::vector<double> ratios(rows.size());
  std::vector<double> minorants(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) ratios[i] = rows[i].beta / mean;
  k.rate_minorant(ratios.data(), minorants.data(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].minorant = minorants[i];

  std::vector<double> acc(samples, 0.0), draws(samples), means(samples);
  for (std::uint64_t step = 1; step <= max_n; ++step) {
    RngStream rng(grid.seed, step);
    for (std::size_t j = 0; j < samples; ++j) draws[j] = exponential_from_uniform(rng.next_uniform(), grid.rate);
    k.accumulate_mean(acc.data(), draws.data(), static_cast<double>(step), means.data(), samples);

    for (auto& row : rows) {
      if (row.n != step) continue;
      const std::size_t hits = row.side == TailSide::upper
                                   ? k.count_at_least(means.data(), row.beta, samples)
                                   : k.count_at_most(means.data(), row.beta, samples);
      const double p = static_cast<double>(hits) / static_cast<double>(samples);
      row.mc_estimate = p;
      row.mc_stderr = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    }
  }
  return rows;
}

}  // namespace mucb
