#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace lpball {

/// Philox4x32-10 block function (Salmon et al., SC'11). Maps a 128-bit counter
/// and a 64-bit key to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based random stream.
///
/// A stream is identified by (seed, stream_id). The seed is the Philox key; the
/// stream id occupies the upper 64 bits of the counter and the lower 64 bits
/// count blocks within the stream. Two streams with different ids never share
/// a block, and constructing a stream is O(1), so every Monte Carlo trial gets
/// its own stream keyed by its global trial index. That makes results
/// independent of how trials are split into chunks or scheduled on workers.
///
/// Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    if (index_ == buffer_.size()) refill();
    return buffer_[index_++];
  }

  /// Uniform double in the open interval (0, 1), 53 bits of resolution.
  double uniform() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

 private:
  // Blocks are generated kBlocks at a time; the output sequence is the same
  // as one block per refill.
  static constexpr std::size_t kBlocks = 4;

  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2 * kBlocks> buffer_{};
  std::size_t index_ = 2 * kBlocks;
};

/// SplitMix64 finaliser; used to derive independent seeds for distinct
/// purposes (pilot runs, ball vs sphere campaigns) from one user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

}  // namespace lpball
