#pragma once

#include <cstdint>
#include <vector>

namespace ap3::ntt {

/// 2^64 - 2^32 + 1. Its multiplicative group has 2-adic order 2^32, so
/// power-of-two transforms up to that length are available, and counts
/// below the prime are represented exactly.
inline constexpr uint64_t kPrime = 0xffffffff00000001ull;

uint64_t mul(uint64_t a, uint64_t b);
uint64_t add(uint64_t a, uint64_t b);
uint64_t sub(uint64_t a, uint64_t b);
uint64_t pow(uint64_t base, uint64_t exp);

/// In-place radix-2 transform; size must be a power of two.
void transform(std::vector<uint64_t>& a, bool inverse);

/// Exact linear self-convolution c[t] = #{(i, j) : i + j = t, counted with
/// a's multiplicities}; result has length 2n - 1. Values must stay below
/// kPrime, which holds for any counting use with n below 2^32.
std::vector<uint64_t> self_convolution(const std::vector<uint64_t>& a);

}  // namespace ap3::ntt
