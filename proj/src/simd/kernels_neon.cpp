// AArch64 Advanced SIMD variants; NEON is baseline on AArch64.
#include <arm_neon.h>

#include <limits>

#include "mucb/simd/kernels.hpp"

namespace mucb::simd {
namespace {

constexpr std::size_t kLanes = 2;

void mucb_indexes(const double* pulls, const double* sums, double budget, double* scaling,
                  double* index, std::uint8_t* forced, std::size_t n) {
  const float64x2_t b = vdupq_n_f64(budget);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t inf = vdupq_n_f64(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t p = vld1q_f64(pulls + i);
    const float64x2_t s = vld1q_f64(sums + i);
    const uint64x2_t mask = vcleq_f64(p, b);
    const float64x2_t m = vdivq_f64(one, vsubq_f64(one, vsqrtq_f64(vdivq_f64(b, p))));
    const float64x2_t idx = vmulq_f64(vdivq_f64(s, p), m);
    vst1q_f64(scaling + i, vbslq_f64(mask, inf, m));
    vst1q_f64(index + i, vbslq_f64(mask, inf, idx));
    forced[i] = static_cast<std::uint8_t>(vgetq_lane_u64(mask, 0) & 1);
    forced[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(mask, 1) & 1);
  }
  detail::scalar_table.mucb_indexes(pulls + i, sums + i, budget, scaling + i, index + i, forced + i,
                                    n - i);
}

void ucb1_indexes(const double* pulls, const double* sums, double log_t, double* index,
                  std::size_t n) {
  const float64x2_t two_log_t = vdupq_n_f64(2.0 * log_t);
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t inf = vdupq_n_f64(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t p = vld1q_f64(pulls + i);
    const float64x2_t s = vld1q_f64(sums + i);
    const uint64x2_t unplayed = vceqq_f64(p, zero);
    const float64x2_t v = vaddq_f64(vdivq_f64(s, p), vsqrtq_f64(vdivq_f64(two_log_t, p)));
    vst1q_f64(index + i, vbslq_f64(unplayed, inf, v));
  }
  detail::scalar_table.ucb1_indexes(pulls + i, sums + i, log_t, index + i, n - i);
}

std::size_t count_at_least(const double* x, double threshold, std::size_t n) {
  const float64x2_t t = vdupq_n_f64(threshold);
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = vsubq_u64(acc, vcgeq_f64(vld1q_f64(x + i), t));
  return static_cast<std::size_t>(vaddvq_u64(acc)) +
         detail::scalar_table.count_at_least(x + i, threshold, n - i);
}

std::size_t count_at_most(const double* x, double threshold, std::size_t n) {
  const float64x2_t t = vdupq_n_f64(threshold);
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = vsubq_u64(acc, vcleq_f64(vld1q_f64(x + i), t));
  return static_cast<std::size_t>(vaddvq_u64(acc)) +
         detail::scalar_table.count_at_most(x + i, threshold, n - i);
}

void accumulate_mean(double* acc, const double* draws, double divisor, double* means,
                     std::size_t n) {
  const float64x2_t d = vdupq_n_f64(divisor);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t a = vaddq_f64(vld1q_f64(acc + i), vld1q_f64(draws + i));
    vst1q_f64(acc + i, a);
    vst1q_f64(means + i, vdivq_f64(a, d));
  }
  detail::scalar_table.accumulate_mean(acc + i, draws + i, divisor, means + i, n - i);
}

void rate_minorant(const double* ratio, double* out, std::size_t n) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t two = vdupq_n_f64(2.0);
  const float64x2_t three = vdupq_n_f64(3.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t r = vld1q_f64(ratio + i);
    const float64x2_t d = vsubq_f64(one, r);
    const float64x2_t num = vmulq_f64(three, vmulq_f64(d, d));
    const float64x2_t den = vmulq_f64(two, vaddq_f64(one, vmulq_f64(two, r)));
    vst1q_f64(out + i, vdivq_f64(num, den));
  }
  detail::scalar_table.rate_minorant(ratio + i, out + i, n - i);
}

}  // namespace

namespace detail {
const KernelTable neon_table{Isa::neon,     &mucb_indexes,    &ucb1_indexes, &count_at_least,
                             &count_at_most, &accumulate_mean, &rate_minorant};
}  // namespace detail

}  // namespace mucb::simd
