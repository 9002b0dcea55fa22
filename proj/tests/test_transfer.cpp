#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/ap_count.hpp"
#include "core/error.hpp"
#include "core/fourier.hpp"
#include "core/modmath.hpp"
#include "core/residue_set.hpp"
#include "core/rng.hpp"
#include "core/transfer.hpp"

using namespace ap3;

namespace {

// Oracle for mu_p over the integer elements: plain triple loop mod p.
uint64_t total_mod_p_oracle(const ResidueSet& w, uint64_t p) {
  uint64_t total = 0;
  for (uint64_t x : w.elements()) {
    for (uint64_t y : w.elements()) {
      for (uint64_t z : w.elements()) {
        if ((x + y) % p == (2 * z) % p) ++total;
      }
    }
  }
  return total;
}

}  // namespace

TEST_CASE("find_companion_prime") {
  CHECK(find_companion_prime(101, 0.9).p == 53);
  CHECK(find_companion_prime(13, 0.5).p == 7);
  const CompanionPrime narrow = find_companion_prime(101, 0.009);
  CHECK(narrow.p == 53);
  CHECK(!narrow.in_strict_interval);  // 53 - 50.5 = 2.5 > 101^0.009
  const CompanionPrime wide = find_companion_prime(101, 0.9);
  CHECK(wide.in_strict_interval);
  CHECK_THROWS_AS(find_companion_prime(3, 0.5), Error);
}

TEST_CASE("residue occupancy identities") {
  const uint64_t q = 101, p = 53;
  // W inside [0, p-1]: no doubling at all.
  const ResidueSet low(q, {1, 5, 40, 52});
  const OccupancyReport lo = residue_occupancy(low, p);
  CHECK(lo.occupied == 4);
  CHECK(lo.doubles == 0);
  // {0, p} collapses to a single residue hit twice.
  const OccupancyReport pair = residue_occupancy(ResidueSet(q, {0, 53}), p);
  CHECK(pair.occupied == 1);
  CHECK(pair.doubles == 1);

  SplitMix64 rng(2026);
  for (int i = 0; i < 100; ++i) {
    const ResidueSet w = ResidueSet::random_set(q, rng.below(q + 1), rng.next());
    const OccupancyReport occ = residue_occupancy(w, p);
    CHECK(occ.singles + 2 * occ.doubles == w.size());
    CHECK(occ.occupied + occ.doubles == w.size());
    CHECK(split_intersection(w, p) == occ.doubles);
  }
  CHECK_THROWS_AS(residue_occupancy(low, 11), Error);   // p <= q/2
  CHECK_THROWS_AS(residue_occupancy(low, 101), Error);  // p >= q
}

TEST_CASE("split_intersection examples") {
  const uint64_t q = 101, p = 53;
  CHECK(split_intersection(ResidueSet(q, {1, 2, 3}), p) == 0);
  CHECK(split_intersection(ResidueSet(q, {3, 56}), p) == 1);  // {3, p+3}
}

TEST_CASE("mu_transfer_report") {
  const uint64_t q = 101, p = 53;
  const TransferReport empty = mu_transfer_report(ResidueSet::empty_set(q), p);
  CHECK(empty.total_q == 0);
  CHECK(empty.total_p == 0);
  CHECK(empty.residual == 0.0);

  const ResidueSet full = ResidueSet::full_set(q);
  const TransferReport fr = mu_transfer_report(full, p);
  CHECK(fr.mu_q == doctest::Approx(1.0));
  CHECK(fr.total_p == total_mod_p_oracle(full, p));
  CHECK(fr.delta_num == 2 * 53 - 101);

  SplitMix64 rng(6);
  for (int i = 0; i < 10; ++i) {
    const ResidueSet w = ResidueSet::random_set(q, rng.below(q + 1), rng.next());
    const TransferReport r = mu_transfer_report(w, p);
    CHECK(r.total_p == total_mod_p_oracle(w, p));
    // Exact rational residual is consistent with the float view.
    CHECK(r.residual ==
          doctest::Approx(static_cast<double>(r.residual_num) / (101.0 * 101.0 * 101.0)));
    CHECK(r.residual_den_is_q_cubed == 101ull * 101 * 101);
  }
  CHECK_THROWS_AS(mu_transfer_report(full, 103), Error);
  CHECK_THROWS_AS(mu_transfer_report(full, 47), Error);
}

TEST_CASE("pq_switch_check") {
  const uint64_t q = 1009, p = 509;
  const ResidueSet w = ResidueSet::random_set(q, 300, 8);
  const PqSwitchCheck zero = pq_switch_check(w, 0, p, 10);
  CHECK(zero.error < 1e-9);
  CHECK(std::abs(zero.lhs - std::complex<double>(300.0, 0.0)) < 1e-9);

  SplitMix64 rng(77);
  for (int i = 0; i < 50; ++i) {
    const ResidueSet s = ResidueSet::random_set(q, 1 + rng.below(q), rng.next());
    const int64_t b = static_cast<int64_t>(rng.below(21)) - 10;
    const PqSwitchCheck check = pq_switch_check(s, b, p, 22);
    CHECK(check.error <= 10.0 * check.budget + 1e-9);
  }
  CHECK_THROWS_AS(pq_switch_check(w, 30, p, 10), Error);     // |2b| >= Q
  CHECK_THROWS_AS(pq_switch_check(w, 10, p, 100000), Error);  // Q delta too large
}

TEST_CASE("approx_prop_check requires a verified certificate") {
  // Dense set, large epsilon: rho eps^2 is big enough that the evaluation
  // range [5 v q^(-rho eps^2), 1/2] is nonempty at this scale.
  const ResidueSet dense = ResidueSet::random_set(401, 360, 11);
  const ResidueSet w = build_w(dense, 0, 1);
  const RectificationCertificate cert = spectral_certificate(w, 0.75, w.density(), 1);
  REQUIRE(cert.verified);
  REQUIRE(!cert.vacuous);

  const ApproxPropCheck at_half = approx_prop_check(w, 0.5, cert);
  CHECK(at_half.lhs >= 0.0);
  CHECK(at_half.bound > 0.0);
  CHECK(at_half.ok);
  CHECK_THROWS_AS(approx_prop_check(w, 0.01, cert), Error);  // below range

  RectificationCertificate broken = cert;
  broken.verified = false;
  CHECK_THROWS_AS(approx_prop_check(w, 0.5, broken), Error);

  // Empty set short-circuits: nothing to sum, trivially within bound.
  const RectificationCertificate empty_cert =
      spectral_certificate(ResidueSet::empty_set(401), 0.75, 0.0, 1);
  const ApproxPropCheck empty = approx_prop_check(ResidueSet::empty_set(401), 0.5, empty_cert);
  CHECK(empty.lhs == 0.0);
  CHECK(empty.ok);
}

TEST_CASE("invariance_profile") {
  // Interval: values[j] = m - j while j <= m.
  std::vector<uint64_t> block;
  for (uint64_t i = 0; i < 10; ++i) block.push_back(i);
  const ResidueSet s(101, block);
  const InvarianceProfile profile = invariance_profile(s, 1, 0.4);
  REQUIRE(profile.values.size() == 7);  // ceil(101^0.4)
  for (size_t j = 0; j < profile.values.size(); ++j) {
    CHECK(profile.values[j] == 10 - j);
  }
  CHECK(profile.values[0] == s.size());
  CHECK(profile.score == doctest::Approx(4.0 / 10.0));
  CHECK_THROWS_AS(invariance_profile(s, 0, 0.4), Error);
  CHECK_THROWS_AS(invariance_profile(s, 1, 0.9, 10), Error);  // cap
}

TEST_CASE("main_theorem_experiment completes with all checks") {
  ExperimentConfig config;
  config.local.iterations = 3000;
  config.local.restarts = 4;
  const ExperimentReport report = main_theorem_experiment(101, 0.3, 0.25, 0.2, 42, config);
  CHECK(report.all_checks_ok);
  CHECK(!report.degenerate);
  CHECK(report.companion.p == 53);
  CHECK(report.search.report.size == 31);
  CHECK(report.sweep.size() == 3);
  for (const VSweepEntry& entry : report.sweep) {
    CHECK(entry.disjointness_ok);
    CHECK(entry.identity_ok);
    CHECK(entry.count_preserved);
    CHECK(entry.occupancy_ok);
    CHECK(entry.split_matches_doubles);
  }
  CHECK(report.profile.values.size() == 3);
  CHECK(report.profile.values[0] == 31);

  // Deterministic rerun.
  const ExperimentReport again = main_theorem_experiment(101, 0.3, 0.25, 0.2, 42, config);
  CHECK(again.search.best == report.search.best);
  CHECK(again.profile.values == report.profile.values);
  CHECK(again.transfer.total_p == report.transfer.total_p);

  // Degenerate flag for tiny q.
  const ExperimentReport tiny = main_theorem_experiment(7, 0.4, 0.3, 0.2, 1, config);
  CHECK(tiny.degenerate);
  CHECK(tiny.all_checks_ok);
}
