#include "core/residue_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "core/error.hpp"
#include "core/modmath.hpp"
#include "core/rng.hpp"

namespace ap3 {

namespace {

size_t word_count(uint64_t q) { return static_cast<size_t>((q + 63) >> 6); }

void mask_padding(std::vector<uint64_t>& words, uint64_t q) {
  const unsigned used = static_cast<unsigned>(q & 63);
  if (used != 0) words.back() &= (uint64_t{1} << used) - 1;
}

std::vector<uint64_t> elements_from_bits(const std::vector<uint64_t>& words, uint64_t q) {
  std::vector<uint64_t> out;
  for (size_t w = 0; w < words.size(); ++w) {
    uint64_t bits = words[w];
    while (bits != 0) {
      const unsigned tz = static_cast<unsigned>(std::countr_zero(bits));
      const uint64_t value = (static_cast<uint64_t>(w) << 6) + tz;
      if (value < q) out.push_back(value);
      bits &= bits - 1;
    }
  }
  return out;
}

// dst |= (src << s), truncated to q bits.
void or_shifted_left(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, uint64_t q,
                     uint64_t s) {
  const size_t nw = dst.size();
  const size_t ws = static_cast<size_t>(s >> 6);
  const unsigned bs = static_cast<unsigned>(s & 63);
  for (size_t i = 0; i + ws < nw; ++i) {
    const uint64_t v = src[i];
    dst[i + ws] |= bs ? (v << bs) : v;
    if (bs != 0 && i + ws + 1 < nw) dst[i + ws + 1] |= v >> (64 - bs);
  }
  mask_padding(dst, q);
}

// dst |= (src >> s).
void or_shifted_right(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, uint64_t s) {
  const size_t nw = dst.size();
  const size_t ws = static_cast<size_t>(s >> 6);
  const unsigned bs = static_cast<unsigned>(s & 63);
  for (size_t i = ws; i < nw; ++i) {
    uint64_t v = src[i] >> bs;
    if (bs != 0 && i + 1 < nw) v |= src[i + 1] << (64 - bs);
    dst[i - ws] |= v;
  }
}

}  // namespace

void validate_set_modulus(uint64_t q) {
  if (q < 3 || (q & 1) == 0) fail(Errc::invalid_argument, "modulus must be an odd prime >= 3");
  if (q > kMaxSetModulus) {
    fail(Errc::range, "modulus " + std::to_string(q) + " exceeds the set representation cap");
  }
  if (!is_prime_u64(q)) fail(Errc::invalid_argument, "modulus " + std::to_string(q) + " is not prime");
}

ResidueSet::ResidueSet(uint64_t q, std::vector<uint64_t> elements) {
  validate_set_modulus(q);
  std::sort(elements.begin(), elements.end());
  std::vector<uint64_t> words(word_count(q), 0);
  for (size_t i = 0; i < elements.size(); ++i) {
    const uint64_t v = elements[i];
    if (v >= q) {
      fail(Errc::invalid_argument,
           "element " + std::to_string(v) + " out of range [0, " + std::to_string(q - 1) + "]");
    }
    if (i > 0 && elements[i - 1] == v) {
      fail(Errc::invalid_argument, "duplicate element " + std::to_string(v));
    }
    words[v >> 6] |= uint64_t{1} << (v & 63);
  }
  q_ = q;
  elements_ = std::move(elements);
  words_ = std::move(words);
}

ResidueSet ResidueSet::empty_set(uint64_t q) { return ResidueSet(q, {}); }

ResidueSet ResidueSet::full_set(uint64_t q) {
  validate_set_modulus(q);
  std::vector<uint64_t> words(word_count(q), ~uint64_t{0});
  mask_padding(words, q);
  return from_bits(q, std::move(words));
}

ResidueSet ResidueSet::from_bits(uint64_t q, std::vector<uint64_t> words) {
  validate_set_modulus(q);
  if (words.size() != word_count(q)) fail(Errc::internal, "bit-vector size mismatch");
  ResidueSet s;
  s.q_ = q;
  s.elements_ = elements_from_bits(words, q);
  s.words_ = std::move(words);
  return s;
}

ResidueSet ResidueSet::random_set(uint64_t q, uint64_t m, uint64_t seed) {
  validate_set_modulus(q);
  if (m > q) {
    fail(Errc::invalid_argument,
         "requested cardinality " + std::to_string(m) + " exceeds modulus " + std::to_string(q));
  }
  SplitMix64 rng(seed);
  std::vector<uint64_t> words(word_count(q), 0);
  const auto test = [&](uint64_t v) { return (words[v >> 6] >> (v & 63)) & 1; };
  const auto set = [&](uint64_t v) { words[v >> 6] |= uint64_t{1} << (v & 63); };
  // Floyd's sampling: uniform over m-subsets, one draw per element.
  for (uint64_t j = q - m; j < q; ++j) {
    const uint64_t r = rng.below(j + 1);
    if (test(r)) {
      set(j);
    } else {
      set(r);
    }
  }
  return from_bits(q, std::move(words));
}

AffineMap::AffineMap(uint64_t scale_in, uint64_t offset_in, uint64_t modulus_in)
    : scale(scale_in % modulus_in), offset(offset_in % modulus_in), modulus(modulus_in) {
  if (scale == 0) fail(Errc::invalid_argument, "affine map scale must be nonzero mod q");
}

uint64_t AffineMap::operator()(uint64_t x) const {
  return add_mod(mul_mod(scale, x, modulus), offset, modulus);
}

ResidueSet affine_apply(const ResidueSet& s, const AffineMap& m) {
  if (m.modulus != s.modulus()) fail(Errc::invalid_argument, "affine map modulus mismatch");
  std::vector<uint64_t> image;
  image.reserve(s.size());
  for (uint64_t e : s.elements()) image.push_back(m(e));
  return ResidueSet(s.modulus(), std::move(image));
}

uint64_t shift_intersection(const ResidueSet& s, uint64_t b) {
  const uint64_t q = s.modulus();
  b %= q;
  if (b == 0) return s.size();
  // (S + b) as a bit-vector is S rotated left by b within q bits.
  std::vector<uint64_t> rotated(s.words().size(), 0);
  or_shifted_left(rotated, s.words(), q, b);
  or_shifted_right(rotated, s.words(), q - b);
  mask_padding(rotated, q);
  uint64_t count = 0;
  for (size_t i = 0; i < rotated.size(); ++i) {
    count += static_cast<uint64_t>(std::popcount(rotated[i] & s.words()[i]));
  }
  return count;
}

uint64_t intersection_size(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) fail(Errc::invalid_argument, "intersection: modulus mismatch");
  uint64_t count = 0;
  for (size_t i = 0; i < a.words().size(); ++i) {
    count += static_cast<uint64_t>(std::popcount(a.words()[i] & b.words()[i]));
  }
  return count;
}

}  // namespace ap3
