#pragma once

#include <cmath>
#include <cstdint>

namespace ddm {

/// Counter-based PRNG (splitmix64 output function applied to key + counter).
/// Streams derived from (seed, stream) are statistically independent, so
/// samples can be generated in any order or in parallel and still reproduce
/// bit-for-bit.
struct CounterRng {
  std::uint64_t key = 0;
  std::uint64_t counter = 0;

  static constexpr const char* kAlgorithm = "splitmix64-counter-v1";

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  static CounterRng for_stream(std::uint64_t seed, std::uint64_t stream) {
    CounterRng r;
    r.key = mix(seed + 0x9e3779b97f4a7c15ull) ^ mix(stream + 0x7f4a7c15f39cc060ull);
    r.counter = 0;
    return r;
  }

  std::uint64_t next_u64() {
    ++counter;
    return mix(key + counter * 0x9e3779b97f4a7c15ull);
  }

  /// Uniform on (0, 1].
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double next_in(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n); n >= 1.
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection-free multiply-shift would bias for huge n; all uses here have
    // n far below 2^32 so the modulo bias is < 2^-32 and irrelevant, but do
    // the rejection anyway since it costs nothing on average.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  /// Standard normal via Box-Muller (two uniforms per draw; no caching, so the
  /// stream position is a pure function of the number of calls).
  double next_gaussian() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }
};

}  // namespace ddm
