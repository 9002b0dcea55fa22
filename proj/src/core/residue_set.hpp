#pragma once

#include <cstdint>
#include <vector>

namespace ap3 {

/// Largest modulus accepted for set construction. The bit-vector carrier
/// allocates q bits, so the cap is practical, not mathematical.
inline constexpr uint64_t kMaxSetModulus = uint64_t{1} << 31;

/// Immutable subset of Z/qZ for an odd prime q. Canonical representation
/// is a bit-vector of length q; the sorted element list is a derived view
/// kept in lockstep. Values are safe to share across threads.
class ResidueSet {
 public:
  /// Placeholder state (modulus 0, no storage) so reports and containers
  /// can default-construct; not a usable set.
  ResidueSet() = default;

  /// Validates q (odd prime, 3 <= q <= kMaxSetModulus) and the elements
  /// (range [0, q-1], no duplicates). Input order does not matter.
  ResidueSet(uint64_t q, std::vector<uint64_t> elements);

  static ResidueSet empty_set(uint64_t q);
  static ResidueSet full_set(uint64_t q);

  /// Uniform m-subset of Z/qZ, deterministic per (q, m, seed).
  static ResidueSet random_set(uint64_t q, uint64_t m, uint64_t seed);

  /// Takes ownership of a prebuilt bit-vector (padding bits must be zero).
  static ResidueSet from_bits(uint64_t q, std::vector<uint64_t> words);

  uint64_t modulus() const noexcept { return q_; }
  uint64_t size() const noexcept { return elements_.size(); }
  double density() const noexcept { return static_cast<double>(size()) / static_cast<double>(q_); }

  bool contains(uint64_t x) const noexcept {
    return x < q_ && (words_[x >> 6] >> (x & 63)) & 1;
  }

  const std::vector<uint64_t>& elements() const noexcept { return elements_; }
  const std::vector<uint64_t>& words() const noexcept { return words_; }

  bool operator==(const ResidueSet& other) const noexcept {
    return q_ == other.q_ && elements_ == other.elements_;
  }

 private:
  uint64_t q_ = 0;
  std::vector<uint64_t> elements_;
  std::vector<uint64_t> words_;
};

/// x -> scale * x + offset (mod q) with gcd(scale, q) = 1.
struct AffineMap {
  AffineMap(uint64_t scale, uint64_t offset, uint64_t modulus);

  uint64_t scale;
  uint64_t offset;
  uint64_t modulus;

  uint64_t operator()(uint64_t x) const;
};

/// Image set {m(s) : s in S}; always preserves cardinality.
ResidueSet affine_apply(const ResidueSet& s, const AffineMap& m);

/// |S intersect (S + b)| on bit-vectors; equal for b and q - b.
uint64_t shift_intersection(const ResidueSet& s, uint64_t b);

/// |A intersect B| for two sets over the same modulus.
uint64_t intersection_size(const ResidueSet& a, const ResidueSet& b);

/// Throws unless q is an odd prime within the representable range.
void validate_set_modulus(uint64_t q);

}  // namespace ap3
