#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/ap_count.hpp"
#include "core/behrend.hpp"
#include "core/error.hpp"

using namespace ap3;

namespace {

// Independent extremal oracle: incremental DP over all subsets of {1..n}.
// apfree[mask] extends apfree[mask without top element] by checking the
// progressions that end at the top element.
uint32_t max_apfree_by_mask_dp(uint32_t n) {
  const uint32_t total = 1u << n;
  std::vector<char> apfree(total);
  apfree[0] = 1;
  uint32_t best = 0;
  for (uint32_t mask = 1; mask < total; ++mask) {
    const int top = 31 - __builtin_clz(mask);  // 0-based; element value top+1
    const uint32_t rest = mask & ~(1u << top);
    bool ok = apfree[rest];
    if (ok) {
      const uint64_t w = top + 1;
      for (int mid_bit = 0; ok && mid_bit < top; ++mid_bit) {
        if (!(rest & (1u << mid_bit))) continue;
        const uint64_t mid = mid_bit + 1;
        if (2 * mid > w) {
          const uint64_t u = 2 * mid - w;
          if (u >= 1 && u != mid && (rest & (1u << (u - 1)))) ok = false;
        }
      }
    }
    apfree[mask] = ok;
    if (ok) best = std::max(best, static_cast<uint32_t>(__builtin_popcount(mask)));
  }
  return best;
}

}  // namespace

TEST_CASE("verify_ap_free") {
  CHECK(!verify_ap_free(std::vector<uint64_t>{1, 2, 3}));
  CHECK(verify_ap_free(std::vector<uint64_t>{1, 2, 4, 5}));
  CHECK(verify_ap_free(std::vector<uint64_t>{}));
  CHECK(verify_ap_free(std::vector<uint64_t>{9}));
  CHECK(verify_ap_free(std::vector<uint64_t>{3, 17}));
  CHECK(!verify_ap_free(std::vector<uint64_t>{2, 6, 10}));
}

TEST_CASE("max_apfree_size against the mask oracle") {
  for (uint32_t n = 1; n <= 16; ++n) {
    CHECK(max_apfree_size(n) == max_apfree_by_mask_dp(n));
  }
  CHECK(max_apfree_size(3) == 2);
  CHECK(max_apfree_size(5) == 4);
  CHECK(max_apfree_size(9) == 5);
  CHECK(max_apfree_witness(5) == std::vector<uint64_t>{1, 2, 4, 5});
  CHECK(max_apfree_witness(9) == std::vector<uint64_t>{1, 2, 4, 8, 9});
  CHECK_THROWS_AS(max_apfree_size(41), Error);
  CHECK_THROWS_AS(max_apfree_size(100, 50), Error);
  CHECK(max_apfree_size(40) == 15);  // full default budget stays fast
}

TEST_CASE("max_apfree_size monotone with unit steps") {
  uint32_t prev = max_apfree_size(1);
  for (uint32_t n = 2; n <= 30; ++n) {
    const uint32_t cur = max_apfree_size(n);
    CHECK(cur >= prev);
    CHECK(cur - prev <= 1);
    prev = cur;
  }
}

TEST_CASE("behrend_set small and structured") {
  const BehrendSet two = behrend_set(2);
  CHECK(two.elements == std::vector<uint64_t>{1, 2});
  CHECK(behrend_set(5).elements.size() == 4);
  CHECK(behrend_set(5).elements == std::vector<uint64_t>{1, 2, 4, 5});
  for (uint64_t x : {10ull, 100ull, 1000ull}) {
    const BehrendSet b = behrend_set(x);
    CHECK(verify_ap_free(b.elements));
    CHECK(!b.elements.empty());
    CHECK(b.elements.front() >= 1);
    CHECK(b.elements.back() <= x);
  }
}

TEST_CASE("behrend_set cardinality at scale") {
  const BehrendSet b = behrend_set(10000);
  CHECK(verify_ap_free(b.elements));
  const double target =
      10000.0 * std::exp(-kBehrendC * std::sqrt(std::log(10000.0)));
  CHECK(static_cast<double>(b.elements.size()) >= target);
  CHECK(b.method == "sphere");
  CHECK(b.dimension >= 2);
}

TEST_CASE("embed_mod_q") {
  const BehrendSet b = behrend_set(5);
  const EmbeddedSet e = embed_mod_q(b, 41);
  CHECK(e.replication == 1);
  CHECK(e.t == ResidueSet(41, {1, 2, 4, 5, 11, 12, 14, 15}));
  CHECK(e.t.elements().back() <= 20);
  // Corollary-style bound: nontrivial count stays under |B| K^2.
  const APCountReport r = count_3aps_naive(e.t);
  CHECK(r.nontrivial < b.elements.size() * e.replication * e.replication);

  // K = 0 regime: T is the source set itself, no progressions at all.
  const EmbeddedSet tight = embed_mod_q(b, 23);  // (23-1)/2 = 11, K = (11-5)/10 = 0
  CHECK(tight.replication == 0);
  CHECK(tight.t.size() == b.elements.size());
  CHECK(count_3aps_naive(tight.t).nontrivial == 0);

  CHECK_THROWS_AS(embed_mod_q(b, 19), Error);  // q <= 4x
}

TEST_CASE("integer and modular progressions coincide inside the lower half") {
  for (uint64_t x : {5ull, 10ull, 20ull}) {
    const BehrendSet b = behrend_set(x);
    for (uint64_t q : {131ull, 257ull}) {
      const EmbeddedSet e = embed_mod_q(b, q);
      // Count integer progressions directly.
      uint64_t integer_nontrivial = 0;
      for (uint64_t a : e.t.elements()) {
        for (uint64_t bb : e.t.elements()) {
          if (a == bb) continue;
          if ((a + bb) % 2 == 0 && e.t.contains((a + bb) / 2)) ++integer_nontrivial;
        }
      }
      CHECK(count_3aps_naive(e.t).nontrivial == integer_nontrivial);
      if (e.replication >= 1) {
        CHECK(count_3aps_naive(e.t).nontrivial <
              b.elements.size() * e.replication * e.replication);
      }
    }
  }
}

TEST_CASE("h_of_rho") {
  CHECK(h_of_rho(1.0, 20) == 3);
  CHECK(h_of_rho(0.9, 5) == 3);
  CHECK(!h_of_rho(0.05, 20).has_value());  // singletons keep density 1/m
  CHECK(!h_of_rho(1.0, 2).has_value());
}

TEST_CASE("rho_sequence") {
  const double c = 1.3, k = 10.0;
  const RhoSequence seq = rho_sequence(k, c, 25);
  REQUIRE(!seq.values.empty());
  CHECK(seq.values[0] == doctest::Approx(std::exp(-2.0 * c * c * std::log(k))).epsilon(1e-15));
  for (size_t n = 0; n + 1 < seq.values.size(); ++n) {
    const double ratio = seq.values[n + 1] / seq.values[n];
    const double expected = 1.0 - c * c * std::log(k) / std::abs(std::log(seq.values[n]));
    CHECK(ratio == doctest::Approx(expected).epsilon(1e-12));
    CHECK(seq.values[n + 1] < seq.values[n]);
    CHECK(seq.values[n + 1] > 0.0);
  }
  // Aggressive parameters drive x_n into floating underflow; the sequence
  // stops with the flag instead of emitting zeros or stalling.
  const RhoSequence cut = rho_sequence(10.0, 5.0, 10000);
  CHECK(cut.truncated);
  CHECK(cut.values.size() < 10000);
  CHECK(cut.values.back() > 0.0);
}
