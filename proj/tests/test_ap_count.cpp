#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/ap_count.hpp"
#include "core/error.hpp"
#include "core/modmath.hpp"
#include "core/residue_set.hpp"
#include "core/rng.hpp"

using namespace ap3;

namespace {

// Independent oracle: enumerate all |S|^3 ordered triples.
uint64_t total_by_triple_enumeration(const ResidueSet& s) {
  const uint64_t q = s.modulus();
  uint64_t total = 0;
  for (uint64_t a : s.elements()) {
    for (uint64_t b : s.elements()) {
      for (uint64_t c : s.elements()) {
        if (add_mod(a, b, q) == add_mod(c, c, q)) ++total;
      }
    }
  }
  return total;
}

}  // namespace

TEST_CASE("naive counter against triple enumeration") {
  const ResidueSet s(7, {1, 2, 3});
  CHECK(total_by_triple_enumeration(s) == 5);
  const APCountReport r = count_3aps_naive(s);
  CHECK(r.total == 5);
  CHECK(r.trivial == 3);
  CHECK(r.nontrivial == 2);
  CHECK(r.mu_num() == 5);
  CHECK(r.mu_den() == 49);

  SplitMix64 rng(2024);
  for (uint64_t q : {5ull, 7ull, 13ull, 31ull, 41ull}) {
    for (int i = 0; i < 20; ++i) {
      const ResidueSet t = ResidueSet::random_set(q, rng.below(q + 1), rng.next());
      CHECK(count_3aps_naive(t).total == total_by_triple_enumeration(t));
    }
  }
}

TEST_CASE("degenerate sets") {
  CHECK(count_3aps_naive(ResidueSet::empty_set(7)).total == 0);
  const APCountReport singleton = count_3aps_naive(ResidueSet(7, {4}));
  CHECK(singleton.total == 1);
  CHECK(singleton.trivial == 1);
  CHECK(singleton.nontrivial == 0);
  const APCountReport full = count_3aps_naive(ResidueSet::full_set(101));
  CHECK(full.total == 101 * 101);
  CHECK(full.mu == doctest::Approx(1.0));
}

TEST_CASE("counter equivalence on both histogram paths") {
  SplitMix64 rng(7);
  for (uint64_t q : {7ull, 41ull, 101ull, 1009ull}) {
    for (int i = 0; i < 8; ++i) {
      const ResidueSet s = ResidueSet::random_set(q, rng.below(q + 1), rng.next());
      const APCountReport naive = count_3aps_naive(s);
      CHECK(count_3aps_convolution(s, HistogramPath::kDirect) == naive);
      CHECK(count_3aps_convolution(s, HistogramPath::kTransform) == naive);
    }
  }
  const ResidueSet embedded(41, {1, 2, 4, 5, 11, 12, 14, 15});
  CHECK(count_3aps_convolution(embedded) == count_3aps_naive(embedded));
}

TEST_CASE("histogram agrees across paths") {
  SplitMix64 rng(55);
  for (int i = 0; i < 10; ++i) {
    const ResidueSet s = ResidueSet::random_set(257, rng.below(258), rng.next());
    CHECK(sumset_histogram(s, HistogramPath::kDirect) ==
          sumset_histogram(s, HistogramPath::kTransform));
  }
}

TEST_CASE("trivial count law and affine invariance") {
  SplitMix64 rng(11);
  const uint64_t q = 101;
  for (int i = 0; i < 40; ++i) {
    const ResidueSet s = ResidueSet::random_set(q, rng.below(q + 1), rng.next());
    const APCountReport base = count_3aps_naive(s);
    CHECK(base.trivial == s.size());
    const AffineMap m(1 + rng.below(q - 1), rng.below(q), q);
    const APCountReport mapped = count_3aps_convolution(affine_apply(s, m));
    CHECK(mapped.total == base.total);
    CHECK(mapped.nontrivial == base.nontrivial);
  }
}

TEST_CASE("monotonicity under adding an element") {
  SplitMix64 rng(13);
  const uint64_t q = 61;
  for (int i = 0; i < 30; ++i) {
    const ResidueSet s = ResidueSet::random_set(q, rng.below(q), rng.next());
    uint64_t extra = rng.below(q);
    while (s.contains(extra)) extra = rng.below(q);
    std::vector<uint64_t> grown = s.elements();
    grown.push_back(extra);
    CHECK(count_3aps_naive(ResidueSet(q, grown)).total >= count_3aps_naive(s).total);
  }
}
