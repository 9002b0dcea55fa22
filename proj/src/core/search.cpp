#include "core/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/error.hpp"
#include "core/modmath.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace ap3 {

namespace {

// Membership bit helpers over raw words.
bool bit_test(const std::vector<uint64_t>& words, uint64_t v) {
  return (words[v >> 6] >> (v & 63)) & 1;
}
void bit_set(std::vector<uint64_t>& words, uint64_t v) { words[v >> 6] |= uint64_t{1} << (v & 63); }
void bit_clear(std::vector<uint64_t>& words, uint64_t v) {
  words[v >> 6] &= ~(uint64_t{1} << (v & 63));
}

// Ordered solutions within B that use e in at least one of the three
// roles, for e in B. Inclusion-exclusion over the roles collapses to
// 2 * #(a-role) + #(c-role) - 2 because any two roles pin the triple to
// (e, e, e).
template <typename ElementRange>
uint64_t triples_through(const std::vector<uint64_t>& words, const ElementRange& elements,
                         uint64_t q, uint64_t e) {
  uint64_t as_outer = 0;  // a = e: count c in B with 2c - e in B
  uint64_t as_mid = 0;    // c = e: count a in B with 2e - a in B
  const uint64_t two_e = add_mod(e, e, q);
  for (uint64_t v : elements) {
    const uint64_t two_v = add_mod(v, v, q);
    as_outer += bit_test(words, sub_mod(two_v, e, q));
    as_mid += bit_test(words, sub_mod(two_e, v, q));
  }
  return 2 * as_outer + as_mid - 2;
}

struct RestartOutcome {
  uint64_t best_nontrivial = 0;
  std::vector<uint64_t> witness;
};

struct MoveState {
  uint64_t q = 0;
  std::vector<uint64_t> words;
  std::vector<uint64_t> elements;  // unsorted
  uint64_t total = 0;
};

uint64_t recount_total(const MoveState& st) {
  const uint64_t q = st.q;
  const uint64_t inv2 = (q + 1) / 2;
  uint64_t total = 0;
  for (uint64_t a : st.elements) {
    for (uint64_t b : st.elements) {
      total += bit_test(st.words, mul_mod(add_mod(a, b, q), inv2, q));
    }
  }
  return total;
}

RestartOutcome run_restart(uint64_t q, uint64_t m, uint64_t restart_seed,
                           const LocalSearchConfig& config) {
  SplitMix64 rng(restart_seed);
  MoveState st;
  st.q = q;
  const ResidueSet start = ResidueSet::random_set(q, m, rng.next());
  st.words = start.words();
  st.elements = start.elements();
  st.total = recount_total(st);

  uint64_t best = st.total;
  std::vector<uint64_t> best_words = st.words;

  double temperature = config.t0 < 0.0 ? static_cast<double>(m) : config.t0;
  for (uint64_t iter = 0; iter < config.iterations; ++iter) {
    if (m == 0 || m == q) break;
    const uint64_t out_index = rng.below(m);
    const uint64_t out_elem = st.elements[out_index];
    uint64_t in_elem = rng.below(q);
    while (bit_test(st.words, in_elem)) in_elem = rng.below(q);

    const uint64_t through_out = triples_through(st.words, st.elements, q, out_elem);
    bit_clear(st.words, out_elem);
    bit_set(st.words, in_elem);
    st.elements[out_index] = in_elem;
    const uint64_t through_in = triples_through(st.words, st.elements, q, in_elem);
    const int64_t delta = static_cast<int64_t>(through_in) - static_cast<int64_t>(through_out);

    bool accept = delta <= 0;
    if (!accept && config.anneal && temperature > 0.0) {
      accept = rng.unit() < std::exp(-static_cast<double>(delta) / temperature);
    }
    if (accept) {
      st.total = static_cast<uint64_t>(static_cast<int64_t>(st.total) + delta);
      if (st.total < best) {
        best = st.total;
        best_words = st.words;
      }
    } else {
      bit_clear(st.words, in_elem);
      bit_set(st.words, out_elem);
      st.elements[out_index] = out_elem;
    }
    temperature *= config.cooling;

    if (config.recheck_interval != 0 && (iter + 1) % config.recheck_interval == 0) {
      if (recount_total(st) != st.total) {
        fail(Errc::internal, "local_search: incremental count diverged from recount");
      }
    }
  }
  if (recount_total(st) != st.total) {
    fail(Errc::internal, "local_search: final recount mismatch");
  }

  RestartOutcome out;
  out.best_nontrivial = best - m;
  out.witness = ResidueSet::from_bits(q, std::move(best_words)).elements();
  return out;
}

}  // namespace

uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap;
  }
  return static_cast<uint64_t>(result);
}

uint64_t density_to_cardinality(double rho, uint64_t q) {
  return static_cast<uint64_t>(std::ceil(rho * static_cast<double>(q) - 1e-9));
}

SearchResult exact_min(uint64_t q, uint64_t m, uint64_t budget) {
  validate_set_modulus(q);
  if (m > q) fail(Errc::invalid_argument, "exact_min: cardinality exceeds modulus");
  const uint64_t combinations = binomial_capped(q, m, uint64_t{1} << 62);
  if (combinations > budget) {
    fail(Errc::budget, "exact_min: C(" + std::to_string(q) + ", " + std::to_string(m) + ") = " +
                           std::to_string(combinations) + " exceeds budget " +
                           std::to_string(budget));
  }

  // Lexicographic enumeration; first strict improvement keeps the
  // lexicographically least witness.
  const uint64_t inv2 = (q + 1) / 2;
  std::vector<uint64_t> half(2 * q);  // (a + b) -> ((a + b) / 2) mod q
  for (uint64_t t = 0; t < 2 * q; ++t) half[t] = mul_mod(t % q, inv2, q);

  std::vector<uint64_t> comb(m);
  for (uint64_t i = 0; i < m; ++i) comb[i] = i;
  std::vector<uint8_t> member(q, 0);

  uint64_t best_nontrivial = ~uint64_t{0};
  std::vector<uint64_t> witness;
  uint64_t enumerated = 0;

  for (;;) {
    ++enumerated;
    std::fill(member.begin(), member.end(), 0);
    for (uint64_t v : comb) member[v] = 1;
    uint64_t total = 0;
    for (uint64_t a : comb) {
      for (uint64_t b : comb) {
        total += member[half[a + b]];
      }
    }
    const uint64_t nontrivial = total - m;
    if (nontrivial < best_nontrivial) {
      best_nontrivial = nontrivial;
      witness = comb;
    }
    if (m == 0) break;
    // next combination in lexicographic order
    int64_t i = static_cast<int64_t>(m) - 1;
    while (i >= 0 && comb[static_cast<size_t>(i)] == q - m + static_cast<uint64_t>(i)) --i;
    if (i < 0) break;
    ++comb[static_cast<size_t>(i)];
    for (size_t j = static_cast<size_t>(i) + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }

  SearchResult result{ResidueSet(q, witness), {}, "exhaustive", enumerated, 0, true};
  result.report = count_3aps_convolution(result.best);
  return result;
}

int64_t delta_count(const ResidueSet& s, uint64_t out_elem, uint64_t in_elem) {
  const uint64_t q = s.modulus();
  if (out_elem >= q || !s.contains(out_elem)) {
    fail(Errc::invalid_argument, "delta_count: out_elem must belong to the set");
  }
  if (in_elem >= q || s.contains(in_elem)) {
    fail(Errc::invalid_argument, "delta_count: in_elem must lie outside the set");
  }
  std::vector<uint64_t> words = s.words();
  const uint64_t through_out = triples_through(words, s.elements(), q, out_elem);
  bit_clear(words, out_elem);
  bit_set(words, in_elem);
  std::vector<uint64_t> swapped;
  swapped.reserve(s.size());
  for (uint64_t v : s.elements()) swapped.push_back(v == out_elem ? in_elem : v);
  const uint64_t through_in = triples_through(words, swapped, q, in_elem);
  return static_cast<int64_t>(through_in) - static_cast<int64_t>(through_out);
}

SearchResult local_search(uint64_t q, uint64_t m, uint64_t seed, const LocalSearchConfig& config) {
  validate_set_modulus(q);
  if (m > q) fail(Errc::invalid_argument, "local_search: cardinality exceeds modulus");

  const std::string method = config.anneal ? "anneal" : "local";
  if (m == 0 || m == q) {
    SearchResult result{m == 0 ? ResidueSet::empty_set(q) : ResidueSet::full_set(q), {}, method, 0,
                        seed, true};
    result.report = count_3aps_convolution(result.best);
    return result;
  }

  std::vector<RestartOutcome> outcomes(config.restarts);
  parallel_for_index(config.threads, config.restarts, [&](uint64_t r) {
    outcomes[r] = run_restart(q, m, SplitMix64::derive(seed, r), config);
  });

  const RestartOutcome* winner = &outcomes[0];
  for (const RestartOutcome& o : outcomes) {
    if (o.best_nontrivial < winner->best_nontrivial ||
        (o.best_nontrivial == winner->best_nontrivial && o.witness < winner->witness)) {
      winner = &o;
    }
  }

  SearchResult result{ResidueSet(q, winner->witness), {}, method,
                      config.iterations * config.restarts, seed, false};
  result.report = count_3aps_convolution(result.best);
  if (result.report.nontrivial != winner->best_nontrivial) {
    fail(Errc::internal, "local_search: winner recount mismatch");
  }
  return result;
}

VarnavidesAudit varnavides_audit(const ResidueSet& s, double rho, uint32_t k, uint64_t budget) {
  const uint64_t q = s.modulus();
  if (k < 3) fail(Errc::invalid_argument, "varnavides_audit: k must be >= 3");
  if (q <= k) fail(Errc::invalid_argument, "varnavides_audit: q must exceed k");
  const unsigned __int128 cost =
      static_cast<unsigned __int128>(q) * q * k;
  if (cost > budget) {
    fail(Errc::budget, "varnavides_audit: q^2 k exceeds budget " + std::to_string(budget));
  }

  VarnavidesAudit audit;
  audit.q = q;
  audit.k = k;
  audit.set_size = s.size();
  audit.rho = rho;

  const double rich_threshold = rho * static_cast<double>(k) / 2.0;
  for (uint64_t a = 0; a < q; ++a) {
    for (uint64_t d = 1; d < q; ++d) {
      uint64_t hits = 0;
      uint64_t term = a;
      for (uint32_t i = 0; i < k; ++i) {
        hits += s.contains(term);
        term = add_mod(term, d, q);
      }
      audit.sum_hits += hits;
      if (static_cast<double>(hits) >= rich_threshold) ++audit.rich_count;
    }
  }
  audit.expected_hits = static_cast<uint64_t>(k) * s.size() * (q - 1);
  audit.identity_ok = audit.sum_hits == audit.expected_hits;
  audit.total = count_3aps_convolution(s).total;
  audit.chain_value =
      static_cast<double>(audit.rich_count) / (static_cast<double>(k) * static_cast<double>(k));
  audit.chain_ok = audit.total * k * k >= audit.rich_count;
  return audit;
}

RqnTable rqn_ratio(double rho, uint64_t n_low, uint64_t n_high, uint64_t budget) {
  if (!(rho > 0.0) || rho > 1.0) fail(Errc::invalid_argument, "rqn_ratio: rho must lie in (0, 1]");
  if (n_low > n_high) fail(Errc::invalid_argument, "rqn_ratio: empty window");
  RqnTable table;
  table.rho = rho;
  for (uint64_t q = n_low; q <= n_high; ++q) {
    if (q < 3 || (q & 1) == 0 || !is_prime_u64(q)) continue;
    const uint64_t m = density_to_cardinality(rho, q);
    const SearchResult r = exact_min(q, m, budget);
    table.rows.push_back({q, m, r.report.nontrivial, r.best.elements()});
  }
  if (table.rows.empty()) fail(Errc::invalid_argument, "rqn_ratio: no primes in window");

  // Compare nontrivial/q^2 across rows by cross-multiplication.
  const auto less_value = [](const RqnRow& x, const RqnRow& y) {
    return static_cast<unsigned __int128>(x.min_nontrivial) * y.q * y.q <
           static_cast<unsigned __int128>(y.min_nontrivial) * x.q * x.q;
  };
  const RqnRow& lo = *std::min_element(table.rows.begin(), table.rows.end(), less_value);
  const RqnRow& hi = *std::max_element(table.rows.begin(), table.rows.end(), less_value);
  table.zero_min = lo.min_nontrivial == 0;
  if (hi.min_nontrivial == 0) {
    table.ratio = 1.0;  // every row is zero
  } else if (table.zero_min) {
    table.ratio = std::numeric_limits<double>::infinity();
  } else {
    const double lo_v = static_cast<double>(lo.min_nontrivial) /
                        (static_cast<double>(lo.q) * static_cast<double>(lo.q));
    const double hi_v = static_cast<double>(hi.min_nontrivial) /
                        (static_cast<double>(hi.q) * static_cast<double>(hi.q));
    table.ratio = hi_v / lo_v;
  }
  return table;
}

}  // namespace ap3
