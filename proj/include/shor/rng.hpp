#pragma once

#include <cstdint>

#include "shor/rational.hpp"

namespace shor {

/// Splittable counter-based generator (SplitMix64). The i-th output is
/// mix(seed + (i+1)*gamma), so the stream is a pure function of the seed and
/// draw index and is identical on every platform. split() derives an
/// independent stream for a worker index.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  /// Independent sub-stream for worker `stream`; deterministic in (seed, stream).
  SplitMix64 split(std::uint64_t stream) const noexcept {
    return SplitMix64(mix(state_ ^ mix(stream + kGamma)));
  }

  /// Uniform integer in [0, bound) via rejection; bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  /// Uniform Integer in [0, bound) via bit-rejection; bound >= 1.
  Integer uniform_below(const Integer& bound);

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace shor
