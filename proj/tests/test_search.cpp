#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "core/ap_count.hpp"
#include "core/error.hpp"
#include "core/modmath.hpp"
#include "core/residue_set.hpp"
#include "core/rng.hpp"
#include "core/search.hpp"

using namespace ap3;

namespace {

// Independent enumeration oracle for tiny instances: recursive subset
// walk plus the triple-loop counter.
uint64_t oracle_total(uint64_t q, const std::vector<uint64_t>& subset) {
  uint64_t total = 0;
  for (uint64_t a : subset) {
    for (uint64_t b : subset) {
      for (uint64_t c : subset) {
        if (add_mod(a, b, q) == add_mod(c, c, q)) ++total;
      }
    }
  }
  return total;
}

uint64_t oracle_min_nontrivial(uint64_t q, uint64_t m) {
  std::vector<uint64_t> subset;
  uint64_t best = ~uint64_t{0};
  const auto walk = [&](auto&& self, uint64_t next) -> void {
    if (subset.size() == m) {
      best = std::min(best, oracle_total(q, subset) - m);
      return;
    }
    if (next >= q || q - next < m - subset.size()) return;
    subset.push_back(next);
    self(self, next + 1);
    subset.pop_back();
    self(self, next + 1);
  };
  walk(walk, 0);
  return best;
}

}  // namespace

TEST_CASE("binomial_capped") {
  CHECK(binomial_capped(5, 2, 1000) == 10);
  CHECK(binomial_capped(13, 5, 1000000) == 1287);
  CHECK(binomial_capped(100, 50, 1000000) == 1000000);
  CHECK(binomial_capped(3, 5, 10) == 0);
}

TEST_CASE("exact_min derived table") {
  const auto check = [](uint64_t q, uint64_t m, uint64_t expected,
                        const std::vector<uint64_t>& witness) {
    const SearchResult r = exact_min(q, m, 1u << 20);
    CHECK(r.report.nontrivial == expected);
    CHECK(r.report.nontrivial == oracle_min_nontrivial(q, m));
    CHECK(r.best.elements() == witness);
    CHECK(r.proven);
    CHECK(r.method == "exhaustive");
    // Report survives a recount from scratch.
    CHECK(count_3aps_naive(r.best) == r.report);
  };
  check(5, 2, 0, {0, 1});
  check(5, 3, 2, {0, 1, 2});
  check(7, 3, 0, {0, 1, 3});
  check(7, 4, 4, {0, 1, 2, 3});
  check(11, 4, 0, {0, 1, 3, 4});
  check(13, 5, 2, {0, 1, 2, 5, 6});
}

TEST_CASE("exact_min budget error names the combination count") {
  try {
    exact_min(101, 50, 1000);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget);
    CHECK(std::string(e.what()).find("C(101, 50)") != std::string::npos);
  }
}

TEST_CASE("delta_count") {
  const uint64_t q = 7;
  const ResidueSet s(q, {1, 2, 3});
  // Against two full recounts.
  const int64_t delta = delta_count(s, 3, 5);
  const uint64_t before = count_3aps_naive(s).total;
  const uint64_t after = count_3aps_naive(ResidueSet(q, {1, 2, 5})).total;
  CHECK(delta == static_cast<int64_t>(after) - static_cast<int64_t>(before));

  CHECK_THROWS_AS(delta_count(s, 5, 6), Error);  // out not in S
  CHECK_THROWS_AS(delta_count(s, 1, 2), Error);  // in already in S

  // Swap in and back out nets zero, and every swap matches recounts.
  SplitMix64 rng(17);
  for (uint64_t qq : {11ull, 31ull, 101ull}) {
    for (int i = 0; i < 25; ++i) {
      const uint64_t m = 2 + rng.below(qq - 3);
      const ResidueSet t = ResidueSet::random_set(qq, m, rng.next());
      const uint64_t out = t.elements()[rng.below(m)];
      uint64_t in = rng.below(qq);
      while (t.contains(in)) in = rng.below(qq);
      const int64_t d = delta_count(t, out, in);
      std::vector<uint64_t> swapped;
      for (uint64_t v : t.elements()) swapped.push_back(v == out ? in : v);
      const ResidueSet t2(qq, swapped);
      CHECK(static_cast<int64_t>(count_3aps_naive(t2).total) ==
            static_cast<int64_t>(count_3aps_naive(t).total) + d);
      CHECK(delta_count(t2, in, out) == -d);
    }
  }
}

TEST_CASE("local_search determinism and optimality floor") {
  LocalSearchConfig config;
  config.iterations = 4000;
  config.restarts = 4;

  const SearchResult a = local_search(7, 3, 12345, config);
  const SearchResult b = local_search(7, 3, 12345, config);
  CHECK(a.best == b.best);
  CHECK(a.report == b.report);

  // Thread count must not affect the outcome.
  LocalSearchConfig threaded = config;
  threaded.threads = 4;
  const SearchResult c = local_search(7, 3, 12345, threaded);
  CHECK(a.best == c.best);

  // Never below the proven minimum; nearly always equal on these sizes.
  for (auto [q, m, proven] :
       std::vector<std::tuple<uint64_t, uint64_t, uint64_t>>{{5, 3, 2}, {7, 3, 0}, {11, 4, 0}}) {
    int matches = 0;
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const SearchResult r = local_search(q, m, seed, config);
      CHECK(r.report.nontrivial >= proven);
      CHECK(r.report.size == m);
      matches += r.report.nontrivial == proven;
    }
    CHECK(matches >= 9);
  }

  const SearchResult full = local_search(7, 7, 9, config);
  CHECK(full.iterations == 0);
  CHECK(full.best == ResidueSet::full_set(7));
}

TEST_CASE("descent variant also works") {
  LocalSearchConfig config;
  config.anneal = false;
  config.iterations = 3000;
  config.restarts = 4;
  const SearchResult r = local_search(7, 3, 3, config);
  CHECK(r.method == "local");
  CHECK(r.report.nontrivial >= 0);
}

TEST_CASE("varnavides audit identity") {
  SplitMix64 rng(23);
  for (uint64_t q : {11ull, 17ull, 101ull}) {
    for (uint32_t k : {3u, 5u, 7u}) {
      const ResidueSet s = ResidueSet::random_set(q, rng.below(q + 1), rng.next());
      const VarnavidesAudit audit = varnavides_audit(s, 0.4, k);
      CHECK(audit.identity_ok);
      CHECK(audit.sum_hits == uint64_t{k} * s.size() * (q - 1));
    }
  }
  // Full set: every progression is entirely inside S.
  const VarnavidesAudit full = varnavides_audit(ResidueSet::full_set(17), 0.9, 4);
  CHECK(full.rich_count == 17 * 16);
  CHECK(full.identity_ok);

  // Chain inequality on audited minimizers, in the k-regime where the
  // count of rich progressions is dominated by total * k^2.
  for (auto [q, m, k] : std::vector<std::tuple<uint64_t, uint64_t, uint32_t>>{
           {13, 5, 5}, {17, 7, 5}, {19, 7, 6}}) {
    const SearchResult minimizer = exact_min(q, m, 1u << 20);
    const VarnavidesAudit audit =
        varnavides_audit(minimizer.best, static_cast<double>(m) / static_cast<double>(q), k);
    CHECK(audit.identity_ok);
    CHECK(audit.chain_ok);
  }

  CHECK_THROWS_AS(varnavides_audit(ResidueSet::full_set(17), 0.5, 4, 10), Error);
  CHECK_THROWS_AS(varnavides_audit(ResidueSet::full_set(17), 0.5, 2), Error);
}

TEST_CASE("rqn ratio window") {
  const RqnTable one = rqn_ratio(0.42, 7, 7, 1u << 20);
  CHECK(one.rows.size() == 1);
  CHECK(one.ratio == 1.0);

  const RqnTable window = rqn_ratio(0.42, 5, 7, 1u << 20);
  REQUIRE(window.rows.size() == 2);
  CHECK(window.rows[0].q == 5);
  CHECK(window.rows[0].m == 3);
  CHECK(window.rows[0].min_nontrivial == 2);
  CHECK(window.rows[1].q == 7);
  CHECK(window.rows[1].m == 3);
  CHECK(window.rows[1].min_nontrivial == 0);
  CHECK(window.zero_min);
  CHECK(std::isinf(window.ratio));

  // Determinism.
  const RqnTable again = rqn_ratio(0.42, 5, 7, 1u << 20);
  CHECK(again.rows[0].witness == window.rows[0].witness);
  CHECK(again.rows[1].witness == window.rows[1].witness);
}

TEST_CASE("density_to_cardinality") {
  CHECK(density_to_cardinality(0.42, 5) == 3);
  CHECK(density_to_cardinality(0.6, 5) == 3);   // exact product stays exact
  CHECK(density_to_cardinality(0.3, 101) == 31);
  CHECK(density_to_cardinality(1.0, 7) == 7);
}
