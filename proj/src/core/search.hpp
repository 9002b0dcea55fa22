#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/ap_count.hpp"
#include "core/residue_set.hpp"

namespace ap3 {

/// Best set found for a cardinality-m minimization of the nontrivial
/// triple count. `proven` is set only when exhaustive enumeration ran to
/// completion.
struct SearchResult {
  ResidueSet best;
  APCountReport report;
  std::string method;  // "exhaustive", "local", or "anneal"
  uint64_t iterations = 0;
  uint64_t seed = 0;
  bool proven = false;
};

/// min(C(n, k), cap) without overflow.
uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap);

/// Global minimum over all m-subsets of Z/qZ, lexicographically least
/// witness. Throws a budget error naming C(q, m) when it exceeds budget.
SearchResult exact_min(uint64_t q, uint64_t m, uint64_t budget);

struct LocalSearchConfig {
  uint64_t iterations = 20000;   // moves per restart
  uint32_t restarts = 8;
  double t0 = -1.0;              // initial temperature; < 0 picks m
  double cooling = 0.995;
  bool anneal = true;            // false: plateau-accepting descent
  uint32_t recheck_interval = 1024;  // full recount cadence, 0 disables
  uint32_t threads = 0;          // 0 = auto
};

/// Swap-neighborhood search (one element out, one in), deterministic per
/// seed; restarts run on derived seeds and reduce to (min count, then
/// lexicographically least witness) independently of thread count.
SearchResult local_search(uint64_t q, uint64_t m, uint64_t seed,
                          const LocalSearchConfig& config = {});

/// Exact change of the ordered triple count under swapping out_elem for
/// in_elem, O(|S|). count(S') = count(S) + delta holds exactly.
int64_t delta_count(const ResidueSet& s, uint64_t out_elem, uint64_t in_elem);

/// Double-counting audit over all q(q-1) ordered k-term progressions.
struct VarnavidesAudit {
  uint64_t q = 0;
  uint32_t k = 0;
  uint64_t set_size = 0;
  double rho = 0.0;
  uint64_t sum_hits = 0;        // sum over progressions of |h intersect S|
  uint64_t expected_hits = 0;   // k |S| (q-1)
  bool identity_ok = false;     // sum_hits == expected_hits (so sum R(h) = |S|(q-1))
  uint64_t rich_count = 0;      // #{h : R(h) >= rho/2}
  double chain_value = 0.0;     // rich_count / k^2
  uint64_t total = 0;           // q^2 mu_q(S), exact
  bool chain_ok = false;        // total * k^2 >= rich_count
};

VarnavidesAudit varnavides_audit(const ResidueSet& s, double rho, uint32_t k,
                                 uint64_t budget = 2000000000ull);

/// Exact minima across the primes of a window, at density rho.
struct RqnRow {
  uint64_t q = 0;
  uint64_t m = 0;
  uint64_t min_nontrivial = 0;
  std::vector<uint64_t> witness;
};

struct RqnTable {
  double rho = 0.0;
  std::vector<RqnRow> rows;
  double ratio = 1.0;   // max/min of nontrivial/q^2 across the window
  bool zero_min = false;
};

RqnTable rqn_ratio(double rho, uint64_t n_low, uint64_t n_high, uint64_t budget);

/// ceil(rho * q) with protection against floating noise at integers.
uint64_t density_to_cardinality(double rho, uint64_t q);

}  // namespace ap3
