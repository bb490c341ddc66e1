#include "mucb/rng.hpp"

#include <limits>

#include "mucb/errors.hpp"

namespace mucb {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t substream)
    : seed_(seed), stream_id_(stream_id), substream_(substream) {}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t block = position_ >> 1;
  if (block > std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("RngStream exhausted: more than 2^33 draws from one substream");
  const unsigned half = static_cast<unsigned>(position_ & 1u);
  if (half == 0) {
    block_ = philox4x32_10({static_cast<std::uint32_t>(block), substream_,
                            static_cast<std::uint32_t>(stream_id_),
                            static_cast<std::uint32_t>(stream_id_ >> 32)},
                           {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
  }
  ++position_;
  return (static_cast<std::uint64_t>(block_[2 * half + 1]) << 32) | block_[2 * half];
}

double RngStream::next_uniform() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace mucb
