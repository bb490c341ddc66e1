#include <cmath>
#include <limits>

#include "mucb/simd/kernels.hpp"

namespace mucb::simd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void mucb_indexes(const double* pulls, const double* sums, double budget, double* scaling,
                  double* index, std::uint8_t* forced, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pulls[i] <= budget) {
      forced[i] = 1;
      scaling[i] = kInf;
      index[i] = kInf;
      continue;
    }
    const double m = 1.0 / (1.0 - std::sqrt(budget / pulls[i]));
    forced[i] = 0;
    scaling[i] = m;
    index[i] = (sums[i] / pulls[i]) * m;
  }
}

void ucb1_indexes(const double* pulls, const double* sums, double log_t, double* index,
                  std::size_t n) {
  const double two_log_t = 2.0 * log_t;
  for (std::size_t i = 0; i < n; ++i) {
    if (pulls[i] == 0.0) {
      index[i] = kInf;
      continue;
    }
    index[i] = sums[i] / pulls[i] + std::sqrt(two_log_t / pulls[i]);
  }
}

std::size_t count_at_least(const double* x, double threshold, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += x[i] >= threshold;
  return c;
}

std::size_t count_at_most(const double* x, double threshold, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += x[i] <= threshold;
  return c;
}

void accumulate_mean(double* acc, const double* draws, double divisor, double* means,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] += draws[i];
    means[i] = acc[i] / divisor;
  }
}

void rate_minorant(const double* ratio, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = 1.0 - ratio[i];
    out[i] = (3.0 * (d * d)) / (2.0 * (1.0 + 2.0 * ratio[i]));
  }
}

}  // namespace

namespace detail {
const KernelTable scalar_table{Isa::scalar,    &mucb_indexes,    &ucb1_indexes, &count_at_least,
                               &count_at_most, &accumulate_mean, &rate_minorant};
}  // namespace detail

}  // namespace mucb::simd
