#pragma once

// Data-parallel inner loops used by the policy engine and the Monte Carlo
// paths. Every kernel has a scalar reference; vector variants are selected at
// runtime and must produce bit-identical output (no FMA, same op order).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace mucb::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  // Multiplicative index over arms. forced[k] = (pulls[k] <= budget); forced
  // arms get scaling = index = +inf, others scaling = 1/(1 - sqrt(budget/pulls))
  // and index = (sums/pulls) * scaling. Requires budget >= 0.
  void (*mucb_indexes)(const double* pulls, const double* sums, double budget, double* scaling,
                       double* index, std::uint8_t* forced, std::size_t n);

  // Additive baseline: sums/pulls + sqrt(2*log_t/pulls); +inf where pulls == 0.
  void (*ucb1_indexes)(const double* pulls, const double* sums, double log_t, double* index,
                       std::size_t n);

  // Number of elements with x >= threshold (resp. x <= threshold).
  std::size_t (*count_at_least)(const double* x, double threshold, std::size_t n);
  std::size_t (*count_at_most)(const double* x, double threshold, std::size_t n);

  // acc[i] += draws[i]; means[i] = acc[i] / divisor.
  void (*accumulate_mean)(double* acc, const double* draws, double divisor, double* means,
                          std::size_t n);

  // out[i] = 3(1 - r)^2 / (2(1 + 2r)) for r = ratio[i].
  void (*rate_minorant)(const double* ratio, double* out, std::size_t n);
};

// Probed hardware support, ignoring overrides.
Isa detect_isa();

// ISAs compiled into this build and supported by the running CPU.
std::vector<Isa> available_isas();

// Table for a specific ISA; throws InvalidArgument if unavailable.
const KernelTable& kernels_for(Isa isa);

// Table chosen once per process: detect_isa(), unless the MUCB_SIMD
// environment variable names another available ISA ("scalar", "avx2", "neon").
const KernelTable& kernels();

namespace detail {
extern const KernelTable scalar_table;
#if defined(MUCB_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(MUCB_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

// Span conveniences over the active table.
std::size_t count_at_least(std::span<const double> x, double threshold);
std::size_t count_at_most(std::span<const double> x, double threshold);
void rate_minorant(std::span<const double> ratio, std::span<double> out);

}  // namespace mucb::simd
