#pragma once

#include <array>
#include <cstdint>

namespace mucb {

/// Philox4x32-10 counter-based block cipher (Salmon et al., Random123).
/// Output depends only on (counter, key), so streams are addressable and
/// bit-stable across platforms.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// A deterministic stream of uniforms keyed by (seed, stream_id, substream).
///
/// Draw j of the stream is taken from Philox block j/2, half j%2, with
/// key = seed and counter = {j/2, substream, stream_id.lo, stream_id.hi}.
/// The episode index is the stream_id; the arm is the substream, so each arm
/// owns a disjoint sequence and its j-th reward does not depend on the policy.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t substream = 0);

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const { return stream_id_; }
  [[nodiscard]] std::uint32_t substream() const { return substream_; }
  [[nodiscard]] std::uint64_t position() const { return position_; }

  std::uint64_t next_u64();

  // Uniform on (0, 1]: (top 53 bits + 1) * 2^-53.
  double next_uniform();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint32_t substream_;
  std::uint64_t position_ = 0;
  std::array<std::uint32_t, 4> block_{};
};

}  // namespace mucb
