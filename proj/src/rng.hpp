#pragma once

#include <cstdint>
#include <random>

#include "normal.hpp"

namespace dart2 {

/// SplitMix64 mix step; used both as a seed scrambler and to derive
/// independent per-repetition sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Sub-seed for logical stream `stream`, item `index` under `master`.
/// Documented scheme: two chained SplitMix64 steps keyed by stream and
/// index, so any repetition is reproducible in isolation.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
  return splitmix64(splitmix64(master ^ (stream * 0xD6E8FEB86659FD93ULL)) + index);
}

/// Deterministic generator built on mt19937_64. Variates are produced by
/// explicit transforms (not std::distribution adapters, whose output is
/// implementation-defined), so streams are bit-stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform on the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via the inverse survival function.
  double normal() { return std_normal_sf_inv(uniform01()); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Unbiased integer in [0, n) via rejection sampling.
  std::uint64_t uniform_index(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dart2
