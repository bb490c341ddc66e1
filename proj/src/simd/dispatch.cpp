#include <cstdlib>
#include <string>

#include "mucb/errors.hpp"
#include "mucb/simd/kernels.hpp"

namespace mucb::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

Isa detect_isa() {
#if defined(MUCB_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
#if defined(MUCB_HAVE_NEON)
  return Isa::neon;
#endif
  return Isa::scalar;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  const Isa best = detect_isa();
  if (best != Isa::scalar) out.push_back(best);
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (isa == Isa::scalar) return detail::scalar_table;
  if (isa != detect_isa())
    throw InvalidArgument("SIMD variant '" + std::string(isa_name(isa)) + "' is not available on this host");
#if defined(MUCB_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::avx2_table;
#endif
#if defined(MUCB_HAVE_NEON)
  if (isa == Isa::neon) return detail::neon_table;
#endif
  return detail::scalar_table;
}

namespace {

const KernelTable& select_table() {
  const char* env = std::getenv("MUCB_SIMD");
  if (env != nullptr && *env != '\0') {
    const std::string_view want(env);
    for (Isa isa : available_isas())
      if (isa_name(isa) == want) return kernels_for(isa);
  }
  return kernels_for(detect_isa());
}

}  // namespace

const KernelTable& kernels() {
  static const KernelTable& table = select_table();
  return table;
}

std::size_t count_at_least(std::span<const double> x, double threshold) {
  return kernels().count_at_least(x.data(), threshold, x.size());
}

std::size_t count_at_most(std::span<const double> x, double threshold) {
  return kernels().count_at_most(x.data(), threshold, x.size());
}

void rate_minorant(std::span<const double> ratio, std::span<double> out) {
  if (out.size() != ratio.size()) throw InvalidArgument("rate_minorant: output size mismatch");
  kernels().rate_minorant(ratio.data(), out.data(), ratio.size());
}

}  // namespace mucb::simd
