#include "core/modmath.hpp"

#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace ap3 {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int r) {
  uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is deterministic for all n < 3.3 * 10^24.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

uint64_t mod_inverse(uint64_t a, uint64_t m) {
  if (m < 2) fail(Errc::invalid_argument, "mod_inverse: modulus must be >= 2");
  a %= m;
  if (a == 0) fail(Errc::invalid_argument, "mod_inverse: 0 has no inverse");
  // Extended Euclid on (a, m); works for any modulus, not just primes.
  // Coefficients stay below m in magnitude but the intermediate product
  // needs 128 bits when m approaches 2^63.
  __int128 t = 0, new_t = 1;
  uint64_t r = m, new_r = a;
  while (new_r != 0) {
    const uint64_t quotient = r / new_r;
    const __int128 tmp_t = t - static_cast<__int128>(quotient) * new_t;
    t = new_t;
    new_t = tmp_t;
    const uint64_t tmp_r = r - quotient * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) fail(Errc::invalid_argument, "mod_inverse: argument shares a factor with the modulus");
  if (t < 0) t += static_cast<__int128>(m);
  return static_cast<uint64_t>(t);
}

std::optional<uint64_t> find_prime_in_interval(uint64_t x, double theta) {
  if (x < 2) fail(Errc::invalid_argument, "find_prime_in_interval: x must be >= 2");
  if (!(theta > 0.0) || theta > 1.0) {
    fail(Errc::invalid_argument, "find_prime_in_interval: theta must lie in (0, 1]");
  }
  const double width = std::pow(static_cast<double>(x), theta);
  if (!(width < 9.2e18)) fail(Errc::range, "find_prime_in_interval: interval width overflows");
  const uint64_t w = static_cast<uint64_t>(width);
  if (x > std::numeric_limits<uint64_t>::max() - w) {
    fail(Errc::range, "find_prime_in_interval: interval endpoint overflows");
  }
  for (uint64_t n = x; n <= x + w; ++n) {
    if (is_prime_u64(n)) return n;
  }
  return std::nullopt;
}

uint64_t next_prime_at_least(uint64_t n) {
  if (n < 2) return 2;
  for (uint64_t c = n;; ++c) {
    if (is_prime_u64(c)) return c;
    if (c == std::numeric_limits<uint64_t>::max()) break;
  }
  fail(Errc::range, "next_prime_at_least: no prime representable in 64 bits");
}

}  // namespace ap3
