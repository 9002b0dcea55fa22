#pragma once

#include <cstdint>

namespace ap3 {

/// Counter-style splittable generator (splitmix64). One explicit 64-bit
/// seed per operation; derived streams make parallel restarts reproducible
/// independently of thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n), n > 0. Rejection sampling keeps the draw
  /// exactly uniform and deterministic per stream position.
  uint64_t below(uint64_t n) {
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      const uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Independent stream for worker `index` under a master seed.
  static uint64_t derive(uint64_t seed, uint64_t index) {
    SplitMix64 g(seed ^ (0xd6e8feb86659fd93ull * (index + 1)));
    return g.next();
  }

 private:
  uint64_t state_;
};

}  // namespace ap3
