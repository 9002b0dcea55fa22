#include "core/ntt.hpp"

#include <bit>
#include <utility>

#include "core/error.hpp"

namespace ap3::ntt {

namespace {

constexpr uint64_t kLow32 = 0xffffffffull;

uint64_t reduce128(unsigned __int128 x) {
  // With 2^64 = 2^32 - 1 and 2^96 = -1 (mod kPrime):
  //   x = lo + 2^64 * mid + 2^96 * hi  ==  lo + (2^32 - 1) * mid - hi.
  const uint64_t lo = static_cast<uint64_t>(x);
  const uint64_t high = static_cast<uint64_t>(x >> 64);
  const uint64_t mid = high & kLow32;
  const uint64_t hi = high >> 32;
  uint64_t r = lo;
  // r -= hi
  if (r >= hi) {
    r -= hi;
  } else {
    r += kPrime - hi;
  }
  // r += mid * (2^32 - 1); the product fits in 64 bits.
  const uint64_t t = (mid << 32) - mid;
  r += t;
  if (r < t) r += kLow32;  // wrapped past 2^64: add 2^64 mod p = 2^32 - 1
  if (r >= kPrime) r -= kPrime;
  return r;
}

uint64_t find_generator() {
  // p - 1 = 2^32 * 3 * 5 * 17 * 257 * 65537.
  constexpr uint64_t factors[] = {2, 3, 5, 17, 257, 65537};
  for (uint64_t g = 3;; ++g) {
    bool ok = true;
    for (uint64_t f : factors) {
      if (pow(g, (kPrime - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

}  // namespace

uint64_t add(uint64_t a, uint64_t b) {
  const uint64_t s = a + b;
  return (s < a || s >= kPrime) ? s - kPrime : s;
}

uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + (kPrime - b); }

uint64_t mul(uint64_t a, uint64_t b) {
  return reduce128(static_cast<unsigned __int128>(a) * b);
}

uint64_t pow(uint64_t base, uint64_t exp) {
  uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

void transform(std::vector<uint64_t>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) fail(Errc::internal, "ntt size must be a power of two");
  if (n > (uint64_t{1} << 32)) fail(Errc::range, "ntt size exceeds the transform order");
  static const uint64_t generator = find_generator();

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    uint64_t w = pow(generator, (kPrime - 1) / len);
    if (inverse) w = pow(w, kPrime - 2);
    for (size_t i = 0; i < n; i += len) {
      uint64_t wn = 1;
      for (size_t k = 0; k < len / 2; ++k) {
        const uint64_t u = a[i + k];
        const uint64_t v = mul(a[i + k + len / 2], wn);
        a[i + k] = add(u, v);
        a[i + k + len / 2] = sub(u, v);
        wn = mul(wn, w);
      }
    }
  }
  if (inverse) {
    const uint64_t n_inv = pow(n % kPrime, kPrime - 2);
    for (auto& x : a) x = mul(x, n_inv);
  }
}

std::vector<uint64_t> self_convolution(const std::vector<uint64_t>& a) {
  if (a.empty()) return {};
  const size_t out_len = 2 * a.size() - 1;
  const size_t n = std::bit_ceil(out_len);
  std::vector<uint64_t> f(a);
  f.resize(n, 0);
  transform(f, false);
  for (auto& x : f) x = mul(x, x);
  transform(f, true);
  f.resize(out_len);
  return f;
}

}  // namespace ap3::ntt
