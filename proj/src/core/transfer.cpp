#include "core/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/fourier.hpp"
#include "core/modmath.hpp"

namespace ap3 {

namespace {

void require_companion_range(uint64_t q, uint64_t p) {
  if (!(2 * p > q && p < q)) {
    fail(Errc::range, "companion prime must satisfy q/2 < p < q (q = " + std::to_string(q) +
                          ", p = " + std::to_string(p) + ")");
  }
  if (!is_prime_u64(p)) {
    fail(Errc::invalid_argument, "companion modulus " + std::to_string(p) + " is not prime");
  }
}

// Multiplicities of W's integer elements mod p; each residue is hit at
// most twice because max(W) < q < 2p.
std::vector<uint8_t> residue_multiplicity(const ResidueSet& w, uint64_t p) {
  std::vector<uint8_t> count(p, 0);
  for (uint64_t e : w.elements()) ++count[e % p];
  return count;
}

}  // namespace

CompanionPrime find_companion_prime(uint64_t q, double eta) {
  if (q < 5) fail(Errc::invalid_argument, "find_companion_prime: q must be >= 5");
  if (!(eta > 0.0)) fail(Errc::invalid_argument, "find_companion_prime: eta must be positive");
  const uint64_t start = (q + 1) / 2;  // ceil(q/2) for odd q
  const double strict_width = std::pow(static_cast<double>(q), eta);
  const double lnq = std::log(static_cast<double>(q));
  uint64_t width = static_cast<uint64_t>(
      std::max(std::ceil(strict_width), std::ceil(2.0 * lnq * lnq)));
  CompanionPrime out;
  for (;;) {
    const uint64_t end = std::min(q - 1, start + width);
    for (uint64_t n = start; n <= end; ++n) {
      if (is_prime_u64(n)) {
        out.p = n;
        out.in_strict_interval =
            static_cast<double>(n) - static_cast<double>(q) / 2.0 <= strict_width;
        return out;
      }
    }
    if (end == q - 1) {
      fail(Errc::internal, "find_companion_prime: no prime in (q/2, q)");
    }
    width *= 2;
  }
}

TransferReport mu_transfer_report(const ResidueSet& w, uint64_t p, const TransferParams& params) {
  const uint64_t q = w.modulus();
  require_companion_range(q, p);
  TransferReport report;
  report.q = q;
  report.p = p;
  report.delta_num = 2 * static_cast<int64_t>(p) - static_cast<int64_t>(q);
  report.epsilon = params.epsilon;
  report.rho = params.rho;
  report.v = params.v;
  report.k = params.k;

  report.total_q = count_3aps_convolution(w).total;

  // Solutions x + y = 2z (mod p) among the integer elements of W. Elements
  // sharing a residue class mod p count separately.
  const std::vector<uint8_t> multiplicity = residue_multiplicity(w, p);
  const uint64_t inv2p = (p + 1) / 2;
  uint64_t total_p = 0;
  for (uint64_t x : w.elements()) {
    for (uint64_t y : w.elements()) {
      total_p += multiplicity[mul_mod(add_mod(x % p, y % p, p), inv2p, p)];
    }
  }
  report.total_p = total_p;

  // Residue-set collapse, for the occupancy point of view.
  std::vector<uint64_t> support;
  for (uint64_t r = 0; r < p; ++r) {
    if (multiplicity[r] != 0) support.push_back(r);
  }
  report.total_p_collapsed = count_3aps_convolution(ResidueSet(p, std::move(support))).total;

  const double qd = static_cast<double>(q);
  const double pd = static_cast<double>(p);
  report.mu_q = static_cast<double>(report.total_q) / (qd * qd);
  report.mu_p = static_cast<double>(report.total_p) / (pd * pd);
  report.mu_p_collapsed = static_cast<double>(report.total_p_collapsed) / (pd * pd);
  report.predicted = (pd * pd * pd) / (qd * qd * qd) * report.mu_p;

  // residual = mu_q - (p^3/q^3) mu_p = (q total_q - p total_p) / q^3.
  const __int128 numerator = static_cast<__int128>(q) * report.total_q -
                             static_cast<__int128>(p) * report.total_p;
  if (numerator > INT64_MAX || numerator < INT64_MIN || q > 2097143) {
    fail(Errc::range, "mu_transfer_report: exact residual exceeds 64-bit range");
  }
  report.residual_num = static_cast<int64_t>(numerator);
  report.residual_den_is_q_cubed = q * q * q;
  report.residual = static_cast<double>(report.residual_num) / (qd * qd * qd);
  return report;
}

PqSwitchCheck pq_switch_check(const ResidueSet& w, int64_t b, uint64_t p, uint64_t big_q) {
  const uint64_t q = w.modulus();
  require_companion_range(q, p);
  if (static_cast<uint64_t>(std::llabs(b)) * 2 >= big_q) {
    fail(Errc::range, "pq_switch_check: |2b| must be below Q");
  }
  const double delta = static_cast<double>(p) - static_cast<double>(q) / 2.0;
  if (static_cast<double>(big_q) * std::abs(delta) >= static_cast<double>(q) / 3.0) {
    fail(Errc::range, "pq_switch_check: Q |delta| must be below q/3");
  }
  PqSwitchCheck check;
  const double bq = 2.0 * static_cast<double>(b) / static_cast<double>(q);
  const double bp = static_cast<double>(b) / static_cast<double>(p);
  check.lhs = eval_at_real(w, bq);
  check.rhs = eval_at_real(w, bp);
  check.error = std::abs(check.lhs - check.rhs);
  check.budget = delta * static_cast<double>(big_q) * static_cast<double>(w.size()) /
                 static_cast<double>(q);
  check.ratio = check.budget > 0.0 ? check.error / check.budget : 0.0;
  return check;
}

ApproxPropCheck approx_prop_check(const ResidueSet& w, double u,
                                  const RectificationCertificate& cert) {
  if (!cert.verified) {
    fail(Errc::precondition, "approx_prop_check: requires a verified rectification certificate");
  }
  ApproxPropCheck check;
  if (w.size() == 0) {
    check.ok = true;
    return check;
  }
  const uint64_t q = w.modulus();
  const double low = 5.0 * static_cast<double>(cert.v) *
                     std::pow(static_cast<double>(q), -cert.rho * cert.epsilon * cert.epsilon);
  if (std::abs(u) < low || std::abs(u) > 0.5) {
    fail(Errc::precondition, "approx_prop_check: u outside [5 v q^(-rho eps^2), 1/2]");
  }
  check.lhs = std::abs(eval_at_real(w, u));
  check.bound = 2.0 * std::numbers::pi * std::cbrt(cert.epsilon / cert.rho) *
                static_cast<double>(w.size());
  check.ok = check.lhs < check.bound;
  return check;
}

OccupancyReport residue_occupancy(const ResidueSet& w, uint64_t p) {
  require_companion_range(w.modulus(), p);
  const std::vector<uint8_t> multiplicity = residue_multiplicity(w, p);
  OccupancyReport report;
  for (uint64_t r = 0; r < p; ++r) {
    if (multiplicity[r] == 0) continue;
    ++report.occupied;
    if (multiplicity[r] == 1) {
      ++report.singles;
    } else {
      ++report.doubles;
    }
  }
  if (report.singles + 2 * report.doubles != w.size()) {
    fail(Errc::internal, "residue_occupancy: multiplicity accounting broke");
  }
  return report;
}

uint64_t split_intersection(const ResidueSet& w, uint64_t p) {
  const uint64_t q = w.modulus();
  require_companion_range(q, p);
  // w in W0 pairs with w + p in W1; both views must agree.
  uint64_t count = 0;
  for (uint64_t e : w.elements()) {
    if (e < p && e + p < q && w.contains(e + p)) ++count;
  }
  if (count != residue_occupancy(w, p).doubles) {
    fail(Errc::internal, "split_intersection: disagreement with occupancy doubles");
  }
  return count;
}

InvarianceProfile invariance_profile(const ResidueSet& s, uint64_t b, double d, uint64_t max_len) {
  const uint64_t q = s.modulus();
  b %= q;
  if (b == 0) fail(Errc::invalid_argument, "invariance_profile: b must be nonzero mod q");
  if (!(d > 0.0) || d >= 1.0) {
    fail(Errc::invalid_argument, "invariance_profile: d must lie in (0, 1)");
  }
  const uint64_t len =
      static_cast<uint64_t>(std::ceil(std::pow(static_cast<double>(q), d) - 1e-12));
  if (len > max_len) {
    fail(Errc::budget, "invariance_profile: profile length " + std::to_string(len) +
                           " exceeds the cap " + std::to_string(max_len));
  }
  InvarianceProfile profile;
  profile.b = b;
  profile.d = d;
  profile.values.reserve(len);
  uint64_t shift = 0;
  uint64_t min_value = ~uint64_t{0};
  for (uint64_t j = 0; j < len; ++j) {
    const uint64_t value = shift_intersection(s, shift);
    profile.values.push_back(value);
    min_value = std::min(min_value, value);
    shift = add_mod(shift, b, q);
  }
  profile.score =
      s.size() == 0 ? 1.0 : static_cast<double>(min_value) / static_cast<double>(s.size());
  return profile;
}

ExperimentReport main_theorem_experiment(uint64_t q, double rho, double epsilon, double d,
                                         uint64_t seed, const ExperimentConfig& config) {
  validate_set_modulus(q);
  if (!(rho > 0.0) || rho > 1.0) {
    fail(Errc::invalid_argument, "experiment: rho must lie in (0, 1]");
  }
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    fail(Errc::invalid_argument, "experiment: epsilon must lie in (0, 1]");
  }
  if (!(d > 0.0) || d >= 1.0) fail(Errc::invalid_argument, "experiment: d must lie in (0, 1)");

  ExperimentReport report;
  report.q = q;
  report.rho = rho;
  report.epsilon = epsilon;
  report.d = d;
  report.seed = seed;
  report.degenerate = q < 11;
  bool ok = true;

  // Stage 1: candidate critical set.
  const uint64_t m = density_to_cardinality(rho, q);
  if (binomial_capped(q, m, uint64_t{1} << 62) <= config.exact_budget) {
    report.search = exact_min(q, m, config.exact_budget);
  } else {
    report.search = local_search(q, m, seed, config.local);
  }
  const ResidueSet& s = report.search.best;
  report.s_count = count_3aps_convolution(s);
  ok = ok && report.s_count == report.search.report;

  // Stage 2: rectify.
  report.dilation = find_rectifying_dilation(s, epsilon);
  if (!report.dilation.found) {
    fail(Errc::internal, "experiment stage rectify: no admissible dilation");
  }
  const ResidueSet s_prime = affine_apply(s, AffineMap(report.dilation.h, 0, q));
  report.s_prime_count = count_3aps_convolution(s_prime);
  ok = ok && report.s_prime_count.total == report.s_count.total;

  // Stage 3: companion prime.
  report.companion = find_companion_prime(q, rho * epsilon * epsilon / 2.0);
  const uint64_t p = report.companion.p;

  // Stage 4: sweep v, comparing W(0,v) with its companion translate.
  const uint64_t v_count =
      static_cast<uint64_t>(std::ceil(std::pow(static_cast<double>(q), d) - 1e-12));
  const uint64_t h_inv = report.dilation.j;  // h^-1 = j
  for (uint64_t v = 1; v <= v_count; ++v) {
    if (mul_mod(4 % q, v, q) == 0) continue;  // 4v = 0 mod q has no inverse
    VSweepEntry entry;
    entry.v = v;
    const ResidueSet w_zero = build_w(s_prime, 0, v);
    const ResidueSet w_shift = build_w(s_prime, q - (p % q), v);
    entry.w_intersection = intersection_size(w_zero, w_shift);
    entry.split_zero = split_intersection(w_zero, p);
    entry.split_shift = split_intersection(w_shift, p);
    entry.disjointness_ok = entry.w_intersection >= entry.split_zero + entry.split_shift;
    // |S intersect (S - 4 v h^-1 p)| equals the W-intersection.
    const uint64_t back_shift = mul_mod(mul_mod(mul_mod(4 % q, v, q), h_inv, q), p % q, q);
    entry.identity_ok = entry.w_intersection == shift_intersection(s, q - back_shift);
    entry.count_preserved = count_3aps_convolution(w_zero).total == report.s_count.total;
    entry.occupancy = residue_occupancy(w_zero, p);
    entry.occupancy_ok = entry.occupancy.singles + 2 * entry.occupancy.doubles == w_zero.size();
    entry.split_matches_doubles = entry.split_zero == entry.occupancy.doubles;
    ok = ok && entry.disjointness_ok && entry.identity_ok && entry.count_preserved &&
         entry.occupancy_ok && entry.split_matches_doubles;
    report.sweep.push_back(entry);

    if (v == 1) {
      report.certificate = spectral_certificate(w_zero, epsilon, s.density(), 1);
      report.certificate.h = report.dilation.h;
      report.certificate.j = report.dilation.j;
      report.certificate.k = 0;
      report.transfer =
          mu_transfer_report(w_zero, p, TransferParams{epsilon, s.density(), 1, 0});
    }
  }

  // Stage 5: invariance profile of S under b = 4 h^-1 p.
  report.profile_shift = mul_mod(mul_mod(4 % q, h_inv, q), p % q, q);
  report.profile = invariance_profile(s, report.profile_shift, d, config.profile_max_len);
  ok = ok && !report.profile.values.empty() && report.profile.values[0] == s.size();

  report.all_checks_ok = ok;
  return report;
}

}  // namespace ap3
