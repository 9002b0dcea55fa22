#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/residue_set.hpp"

namespace ap3 {

/// Default constant in the size target x / exp(C sqrt(ln x)): the
/// classical value 2 sqrt(2 ln 2).
inline constexpr double kBehrendC = 2.3548200450309493;

/// Exact search is exponential; this caps the range handed to it.
inline constexpr uint32_t kDefaultExactApFreeBudget = 40;

/// Progression-free subset of {1..x} with its construction parameters.
/// For the sphere construction: digits c_i in [0, base-1] over `dimension`
/// positions, radix 2*base - 1, points with sum c_i^2 = radius_sq.
struct BehrendSet {
  uint64_t x = 0;
  uint32_t dimension = 0;
  uint32_t base = 0;
  uint64_t radius_sq = 0;
  std::string method;  // "sphere" or "exact"
  std::vector<uint64_t> elements;
};

/// Scans (dimension, radius) near the classical optimum and returns the
/// largest progression-free set found; below the exact-search budget the
/// provably maximum set is returned instead. Output is verified
/// progression-free for x <= 10^4.
BehrendSet behrend_set(uint64_t x);

/// True iff no u != w in T have (u + w)/2 in T. O(|T|^2).
bool verify_ap_free(std::span<const uint64_t> t);

/// T = {s + 2kx : s in B, 0 <= k <= K} inside {0..(q-1)/2}, so integer
/// progressions and mod-q progressions coincide. K is the largest value
/// keeping max(T) <= (q-1)/2.
struct EmbeddedSet {
  ResidueSet t;
  uint64_t replication = 0;  // K
  double rho_target = 0.0;   // 1 / (4 exp(C sqrt(ln x)))
  BehrendSet source;
};

EmbeddedSet embed_mod_q(const BehrendSet& b, uint64_t q);

/// Exact maximum size of a progression-free subset of {1..n} by branch
/// and bound. Throws a budget error for n above `budget`.
uint32_t max_apfree_size(uint32_t n, uint32_t budget = kDefaultExactApFreeBudget);

/// A maximum witness with the lexicographically least element list.
std::vector<uint64_t> max_apfree_witness(uint32_t n, uint32_t budget = kDefaultExactApFreeBudget);

/// Least M <= m_max such that every m in [M, m_max] satisfies
/// max_apfree_size(m) < rho * m; nullopt when even m_max fails. The
/// result is certified only up to m_max.
std::optional<uint32_t> h_of_rho(double rho, uint32_t m_max,
                                 uint32_t budget = kDefaultExactApFreeBudget);

/// x_1 = exp(-2 C^2 ln k), x_{n+1} = x_n (1 - C^2 ln k / |ln x_n|);
/// stops early (with the flag set) if a term would hit 0 or below.
struct RhoSequence {
  std::vector<double> values;
  bool truncated = false;
};

RhoSequence rho_sequence(double k, double c, uint32_t n_max);

}  // namespace ap3
