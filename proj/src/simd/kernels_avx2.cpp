// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>
#include <limits>

#include "mucb/simd/kernels.hpp"

namespace mucb::simd {
namespace {

constexpr std::size_t kLanes = 4;

void mucb_indexes(const double* pulls, const double* sums, double budget, double* scaling,
                  double* index, std::uint8_t* forced, std::size_t n) {
  const __m256d b = _mm256_set1_pd(budget);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d p = _mm256_loadu_pd(pulls + i);
    const __m256d s = _mm256_loadu_pd(sums + i);
    const __m256d mask = _mm256_cmp_pd(p, b, _CMP_LE_OQ);
    const __m256d m = _mm256_div_pd(one, _mm256_sub_pd(one, _mm256_sqrt_pd(_mm256_div_pd(b, p))));
    const __m256d idx = _mm256_mul_pd(_mm256_div_pd(s, p), m);
    _mm256_storeu_pd(scaling + i, _mm256_blendv_pd(m, inf, mask));
    _mm256_storeu_pd(index + i, _mm256_blendv_pd(idx, inf, mask));
    const int bits = _mm256_movemask_pd(mask);
    for (std::size_t j = 0; j < kLanes; ++j) forced[i + j] = static_cast<std::uint8_t>((bits >> j) & 1);
  }
  detail::scalar_table.mucb_indexes(pulls + i, sums + i, budget, scaling + i, index + i, forced + i,
                                    n - i);
}

void ucb1_indexes(const double* pulls, const double* sums, double log_t, double* index,
                  std::size_t n) {
  const __m256d two_log_t = _mm256_set1_pd(2.0 * log_t);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d p = _mm256_loadu_pd(pulls + i);
    const __m256d s = _mm256_loadu_pd(sums + i);
    const __m256d unplayed = _mm256_cmp_pd(p, zero, _CMP_EQ_OQ);
    const __m256d v = _mm256_add_pd(_mm256_div_pd(s, p), _mm256_sqrt_pd(_mm256_div_pd(two_log_t, p)));
    _mm256_storeu_pd(index + i, _mm256_blendv_pd(v, inf, unplayed));
  }
  detail::scalar_table.ucb1_indexes(pulls + i, sums + i, log_t, index + i, n - i);
}

template <int Predicate>
std::size_t count_cmp(const double* x, double threshold, std::size_t n, std::size_t& done) {
  const __m256d t = _mm256_set1_pd(threshold);
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const int bits = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(x + i), t, Predicate));
    c += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(bits)));
  }
  done = i;
  return c;
}

std::size_t count_at_least(const double* x, double threshold, std::size_t n) {
  std::size_t i = 0;
  const std::size_t c = count_cmp<_CMP_GE_OQ>(x, threshold, n, i);
  return c + detail::scalar_table.count_at_least(x + i, threshold, n - i);
}

std::size_t count_at_most(const double* x, double threshold, std::size_t n) {
  std::size_t i = 0;
  const std::size_t c = count_cmp<_CMP_LE_OQ>(x, threshold, n, i);
  return c + detail::scalar_table.count_at_most(x + i, threshold, n - i);
}

void accumulate_mean(double* acc, const double* draws, double divisor, double* means,
                     std::size_t n) {
  const __m256d d = _mm256_set1_pd(divisor);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d a = _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(draws + i));
    _mm256_storeu_pd(acc + i, a);
    _mm256_storeu_pd(means + i, _mm256_div_pd(a, d));
  }
  detail::scalar_table.accumulate_mean(acc + i, draws + i, divisor, means + i, n - i);
}

void rate_minorant(const double* ratio, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d three = _mm256_set1_pd(3.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d r = _mm256_loadu_pd(ratio + i);
    const __m256d d = _mm256_sub_pd(one, r);
    const __m256d num = _mm256_mul_pd(three, _mm256_mul_pd(d, d));
    const __m256d den = _mm256_mul_pd(two, _mm256_add_pd(one, _mm256_mul_pd(two, r)));
    _mm256_storeu_pd(out + i, _mm256_div_pd(num, den));
  }
  detail::scalar_table.rate_minorant(ratio + i, out + i, n - i);
}

}  // namespace

namespace detail {
const KernelTable avx2_table{Isa::avx2,     &mucb_indexes,    &ucb1_indexes, &count_at_least,
                             &count_at_most, &accumulate_mean, &rate_minorant};
}  // namespace detail

}  // namespace mucb::simd
