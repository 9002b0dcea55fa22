#pragma once

#include <cstdint>
#include <optional>

namespace ap3 {

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  a %= m;
  b %= m;
  return b < m - a ? a + b : b - (m - a);
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
  a %= m;
  b %= m;
  return a >= b ? a - b : a + (m - b);
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

/// Deterministic Miller-Rabin, correct for every 64-bit input.
bool is_prime_u64(uint64_t n);

/// b in [1, m-1] with a*b = 1 (mod m). Throws invalid_argument when a = 0
/// (mod m) or when gcd(a, m) > 1.
uint64_t mod_inverse(uint64_t a, uint64_t m);

/// Smallest prime in [x, x + floor(x^theta)], or nullopt when the interval
/// contains none. Throws range error when the endpoint overflows.
std::optional<uint64_t> find_prime_in_interval(uint64_t x, double theta);

/// Smallest prime >= n (n >= 2, result must fit in 64 bits).
uint64_t next_prime_at_least(uint64_t n);

}  // namespace ap3
