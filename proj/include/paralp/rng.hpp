#pragma once

#include <cstdint>

namespace paralp {

/// The named deterministic generator behind every random artifact: splitmix64
/// (Steele/Lea/Flood finalizer). Alternate implementations in any language
/// reproduce identical integer streams from the same seed.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] via modulo (bias is irrelevant at these
  /// tiny ranges and keeps the stream spec trivial).
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace paralp
