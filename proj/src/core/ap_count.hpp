#pragma once

#include <cstdint>
#include <vector>

#include "core/residue_set.hpp"

namespace ap3 {

/// Ordered-triple counts of a + b = 2c (mod q) over a set S. `total`
/// includes the |S| trivial solutions a = b = c; mu is total / q^2, also
/// held exactly as the pair (mu_num, mu_den) = (total, q^2).
struct APCountReport {
  uint64_t q = 0;
  uint64_t size = 0;
  uint64_t total = 0;
  uint64_t trivial = 0;
  uint64_t nontrivial = 0;
  double mu = 0.0;

  uint64_t mu_num() const noexcept { return total; }
  uint64_t mu_den() const noexcept { return q * q; }

  bool operator==(const APCountReport&) const = default;
};

enum class HistogramPath {
  kAuto,      // direct accumulation for small sets, transform above
  kDirect,    // O(|S|^2) pair accumulation
  kTransform  // exact integer convolution
};

/// Pair enumeration: for every (a, b) test membership of (a + b) / 2.
APCountReport count_3aps_naive(const ResidueSet& s);

/// Sumset-histogram route: N(t) = #{(a, b) : a + b = t (mod q)}, then
/// sum N(2c) over c in S. Bit-for-bit equal to the naive counter.
APCountReport count_3aps_convolution(const ResidueSet& s, HistogramPath path = HistogramPath::kAuto);

/// The histogram N(t), length q, exact integers.
std::vector<uint64_t> sumset_histogram(const ResidueSet& s, HistogramPath path = HistogramPath::kAuto);

}  // namespace ap3
