#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "core/ap_count.hpp"
#include "core/rectify.hpp"
#include "core/residue_set.hpp"
#include "core/search.hpp"

namespace ap3 {

/// Companion prime just above q/2. The strict window [q/2, q/2 + q^eta]
/// may be empty at small scale, so the scan widens to a fallback of
/// 2 ln^2 q (doubling further if needed); `in_strict_interval` reports
/// whether the result landed inside the requested window.
struct CompanionPrime {
  uint64_t p = 0;
  bool in_strict_interval = false;
};

CompanionPrime find_companion_prime(uint64_t q, double eta);

/// mu_q vs (p^3/q^3) mu_p for a set W of integers in {0..q-1}, with exact
/// rational bookkeeping: residual = (q total_q - p total_p) / q^3.
/// total_p counts solutions among W's integer elements mod p (elements
/// sharing a residue both count); total_p_collapsed counts over the
/// residue set.
struct TransferReport {
  uint64_t q = 0;
  uint64_t p = 0;
  int64_t delta_num = 0;  // 2p - q, so delta = p - q/2 = delta_num / 2
  uint64_t total_q = 0;
  uint64_t total_p = 0;
  uint64_t total_p_collapsed = 0;
  double mu_q = 0.0;
  double mu_p = 0.0;
  double mu_p_collapsed = 0.0;
  double predicted = 0.0;  // (p^3/q^3) mu_p
  double residual = 0.0;   // mu_q - predicted
  int64_t residual_num = 0;
  uint64_t residual_den_is_q_cubed = 0;  // q^3
  double epsilon = 0.0;
  double rho = 0.0;
  uint64_t v = 0;
  uint64_t k = 0;
};

struct TransferParams {
  double epsilon = 0.0;
  double rho = 0.0;
  uint64_t v = 0;
  uint64_t k = 0;
};

TransferReport mu_transfer_report(const ResidueSet& w, uint64_t p, const TransferParams& params = {});

/// |f_W(2b/q) - f_W(b/p)| against the linearization budget delta*Q*|W|/q.
struct PqSwitchCheck {
  std::complex<double> lhs;  // f_W(2b/q)
  std::complex<double> rhs;  // f_W(b/p)
  double error = 0.0;
  double budget = 0.0;
  double ratio = 0.0;
};

PqSwitchCheck pq_switch_check(const ResidueSet& w, int64_t b, uint64_t p, uint64_t big_q);

/// |f_W(u)| against 2 pi (epsilon/rho)^(1/3) |W| on the far range
/// 5 v q^(-rho eps^2) <= |u| <= 1/2. Requires a verified certificate.
struct ApproxPropCheck {
  double lhs = 0.0;
  double bound = 0.0;
  bool ok = false;
};

ApproxPropCheck approx_prop_check(const ResidueSet& w, double u, const RectificationCertificate& cert);

/// Residues mod p hit by W's integer elements, split by multiplicity
/// (never above 2 since q < 2p).
struct OccupancyReport {
  uint64_t occupied = 0;
  uint64_t singles = 0;
  uint64_t doubles = 0;
};

OccupancyReport residue_occupancy(const ResidueSet& w, uint64_t p);

/// |W0 intersect (W1 - p)| for the split W0 = W in [0, p-1],
/// W1 = W in [p, q-1]; cross-checked against the occupancy doubles.
uint64_t split_intersection(const ResidueSet& w, uint64_t p);

/// values[j] = |S intersect (S + b j)| for 0 <= j < ceil(q^d).
struct InvarianceProfile {
  uint64_t b = 0;
  double d = 0.0;
  std::vector<uint64_t> values;
  double score = 0.0;  // min over j of values[j] / |S|
};

InvarianceProfile invariance_profile(const ResidueSet& s, uint64_t b, double d,
                                     uint64_t max_len = 1000000);

/// Per-v record of the translated-copy experiment.
struct VSweepEntry {
  uint64_t v = 0;
  uint64_t w_intersection = 0;       // |W(0,v) intersect W(-p,v)|
  uint64_t split_zero = 0;           // |W0(0,v) intersect (W1(0,v)-p)|
  uint64_t split_shift = 0;          // |W0(-p,v) intersect (W1(-p,v)-p)|
  bool disjointness_ok = false;      // w_intersection >= split_zero + split_shift
  bool identity_ok = false;          // w_intersection == |S intersect (S - 4v h^-1 p)|
  bool count_preserved = false;      // triple count of W(0,v) equals S's
  OccupancyReport occupancy;         // of W(0,v) mod p
  bool occupancy_ok = false;         // singles + 2 doubles == |W|
  bool split_matches_doubles = false;
};

struct ExperimentReport {
  uint64_t q = 0;
  double rho = 0.0;
  double epsilon = 0.0;
  double d = 0.0;
  uint64_t seed = 0;
  bool degenerate = false;  // q < 11: profiles of length <= 2

  SearchResult search;
  DilationSearchResult dilation;
  APCountReport s_count;
  APCountReport s_prime_count;
  CompanionPrime companion;
  RectificationCertificate certificate;  // on W(0,1)
  std::vector<VSweepEntry> sweep;
  uint64_t profile_shift = 0;  // b = 4 h^-1 p mod q
  InvarianceProfile profile;
  TransferReport transfer;  // on W(0,1)
  bool all_checks_ok = false;
};

struct ExperimentConfig {
  uint64_t exact_budget = 2000000;  // exhaustive search cap on C(q, m)
  LocalSearchConfig local;
  uint64_t profile_max_len = 1000000;
};

/// Full pipeline: minimize, rectify, pick the companion prime, sweep v,
/// and emit the invariance profile. Deterministic per seed.
ExperimentReport main_theorem_experiment(uint64_t q, double rho, double epsilon, double d,
                                         uint64_t seed, const ExperimentConfig& config = {});

}  // namespace ap3
