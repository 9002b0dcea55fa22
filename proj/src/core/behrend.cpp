#include "core/behrend.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace ap3 {

namespace {

// Suffix-bounded include-first DFS. With elements taken in ascending
// order and "include" explored before "exclude", the first maximum-size
// leaf carries the lexicographically least element list.
struct ApFreeSearch {
  uint32_t n;
  const std::vector<uint32_t>& nu;  // nu[k] = exact value for ranges shorter than n
  std::vector<uint64_t> chosen;
  std::vector<uint64_t> best;
  std::vector<bool> in_chosen;

  ApFreeSearch(uint32_t n_in, const std::vector<uint32_t>& nu_in) : n(n_in), nu(nu_in) {
    in_chosen.assign(n + 1, false);
  }

  bool extends_ap_free(uint64_t next) const {
    // next exceeds everything chosen, so it can only close a progression
    // as the top element: u + next = 2 * mid.
    for (uint64_t mid : chosen) {
      const uint64_t doubled = 2 * mid;
      if (doubled > next && doubled - next <= n && in_chosen[doubled - next]) return false;
    }
    return true;
  }

  void run(uint32_t i) {
    const uint32_t remaining = n - i + 1;
    const uint32_t suffix_cap = i == 1 ? remaining : std::min(remaining, nu[remaining]);
    if (chosen.size() + suffix_cap <= best.size()) return;
    if (i > n) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    if (extends_ap_free(i)) {
      chosen.push_back(i);
      in_chosen[i] = true;
      run(i + 1);
      in_chosen[i] = false;
      chosen.pop_back();
    }
    run(i + 1);
  }
};

std::vector<uint64_t> exact_witness(uint32_t n) {
  // Bottom-up: nu[k] doubles as a suffix bound for longer ranges, since a
  // progression-free subset of any k consecutive integers has at most
  // nu[k] elements.
  std::vector<uint32_t> nu(n + 1, 0);
  std::vector<uint64_t> witness;
  for (uint32_t len = 1; len <= n; ++len) {
    ApFreeSearch search(len, nu);
    search.run(1);
    nu[len] = static_cast<uint32_t>(search.best.size());
    if (len == n) witness = search.best;
  }
  return witness;
}

struct SphereCandidate {
  uint32_t dimension = 0;
  uint32_t base = 0;
  uint64_t radius_sq = 0;
  uint64_t count = 0;
};

// Count lattice points of {0..m-1}^d on each squared radius.
std::vector<uint64_t> radius_histogram(uint32_t d, uint32_t m) {
  const uint64_t max_r2 = static_cast<uint64_t>(d) * (m - 1) * (m - 1);
  std::vector<uint64_t> counts(max_r2 + 1, 0);
  counts[0] = 1;
  for (uint32_t dim = 0; dim < d; ++dim) {
    std::vector<uint64_t> next(max_r2 + 1, 0);
    for (uint64_t r2 = 0; r2 <= max_r2; ++r2) {
      if (counts[r2] == 0) continue;
      for (uint32_t digit = 0; digit < m; ++digit) {
        const uint64_t nr2 = r2 + static_cast<uint64_t>(digit) * digit;
        if (nr2 > max_r2) break;
        next[nr2] += counts[r2];
      }
    }
    counts.swap(next);
  }
  return counts;
}

void enumerate_sphere(uint32_t d, uint32_t m, uint64_t radix, uint64_t radius_sq,
                      uint64_t value, uint64_t place, uint32_t dim, std::vector<uint64_t>& out) {
  if (dim == d) {
    if (radius_sq == 0) out.push_back(value);
    return;
  }
  for (uint32_t digit = 0; digit < m; ++digit) {
    const uint64_t d2 = static_cast<uint64_t>(digit) * digit;
    if (d2 > radius_sq) break;
    enumerate_sphere(d, m, radix, radius_sq - d2, value + digit * place, place * radix, dim + 1,
                     out);
  }
}

}  // namespace

bool verify_ap_free(std::span<const uint64_t> t) {
  std::vector<uint64_t> sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      const uint64_t sum = sorted[i] + sorted[j];
      if (sum % 2 != 0) continue;
      if (std::binary_search(sorted.begin(), sorted.end(), sum / 2)) return false;
    }
  }
  return true;
}

uint32_t max_apfree_size(uint32_t n, uint32_t budget) {
  if (n < 1) fail(Errc::invalid_argument, "max_apfree_size: n must be >= 1");
  if (n > budget) {
    fail(Errc::budget, "max_apfree_size: n = " + std::to_string(n) + " exceeds budget " +
                           std::to_string(budget));
  }
  return static_cast<uint32_t>(exact_witness(n).size());
}

std::vector<uint64_t> max_apfree_witness(uint32_t n, uint32_t budget) {
  if (n < 1) fail(Errc::invalid_argument, "max_apfree_witness: n must be >= 1");
  if (n > budget) {
    fail(Errc::budget, "max_apfree_witness: n = " + std::to_string(n) + " exceeds budget " +
                           std::to_string(budget));
  }
  return exact_witness(n);
}

BehrendSet behrend_set(uint64_t x) {
  if (x < 2) fail(Errc::invalid_argument, "behrend_set: x must be >= 2");
  BehrendSet result;
  result.x = x;

  if (x <= kDefaultExactApFreeBudget) {
    result.method = "exact";
    result.elements = max_apfree_witness(static_cast<uint32_t>(x));
    return result;
  }

  result.method = "sphere";
  SphereCandidate best;
  const uint32_t d_cap = static_cast<uint32_t>(std::log2(static_cast<double>(x))) + 1;
  for (uint32_t d = 2; d <= d_cap; ++d) {
    // Largest digit range m with (2m - 1)^d <= x.
    const double root = std::pow(static_cast<double>(x), 1.0 / d);
    uint32_t m = static_cast<uint32_t>((root + 1.0) / 2.0);
    while (m >= 2 && std::pow(2.0 * m - 1.0, d) > static_cast<double>(x)) --m;
    if (m < 2) continue;
    const auto counts = radius_histogram(d, m);
    for (uint64_t r2 = 1; r2 < counts.size(); ++r2) {
      if (counts[r2] > best.count) {
        best = {d, m, r2, counts[r2]};
      }
    }
  }
  if (best.count == 0) fail(Errc::internal, "behrend_set: no sphere candidate found");

  std::vector<uint64_t> points;
  points.reserve(best.count);
  enumerate_sphere(best.dimension, best.base, 2 * best.base - 1, best.radius_sq, 0, 1, 0, points);
  // Digits below base over radix 2*base - 1 add without carries, so the
  // point set is progression-free; shift from [0, x-1] into {1..x}.
  for (auto& p : points) p += 1;
  std::sort(points.begin(), points.end());

  result.dimension = best.dimension;
  result.base = best.base;
  result.radius_sq = best.radius_sq;
  result.elements = std::move(points);

  if (x <= 10000 && !verify_ap_free(result.elements)) {
    fail(Errc::internal, "behrend_set: construction produced a progression");
  }
  return result;
}

EmbeddedSet embed_mod_q(const BehrendSet& b, uint64_t q) {
  const uint64_t x = b.x;
  if (q <= 4 * x) {
    fail(Errc::range, "embed_mod_q: modulus must exceed 4x = " + std::to_string(4 * x));
  }
  validate_set_modulus(q);
  const uint64_t half = (q - 1) / 2;
  // Largest K with x + 2Kx <= (q-1)/2; keeping T inside {0..(q-1)/2} is
  // what makes integer and mod-q progressions coincide.
  const uint64_t k_max = (half - x) / (2 * x);
  std::vector<uint64_t> elements;
  elements.reserve(b.elements.size() * (k_max + 1));
  for (uint64_t k = 0; k <= k_max; ++k) {
    for (uint64_t s : b.elements) elements.push_back(s + 2 * k * x);
  }
  EmbeddedSet out{ResidueSet(q, std::move(elements)), k_max, 0.0, b};
  out.rho_target =
      1.0 / (4.0 * std::exp(kBehrendC * std::sqrt(std::log(static_cast<double>(x)))));
  return out;
}

std::optional<uint32_t> h_of_rho(double rho, uint32_t m_max, uint32_t budget) {
  if (!(rho > 0.0) || rho > 1.0) fail(Errc::invalid_argument, "h_of_rho: rho must lie in (0, 1]");
  if (m_max < 1) fail(Errc::invalid_argument, "h_of_rho: m_max must be >= 1");
  uint32_t least = m_max + 1;
  for (uint32_t m = m_max; m >= 1; --m) {
    if (static_cast<double>(max_apfree_size(m, budget)) < rho * static_cast<double>(m)) {
      least = m;
    } else {
      break;
    }
  }
  if (least > m_max) return std::nullopt;
  return least;
}

RhoSequence rho_sequence(double k, double c, uint32_t n_max) {
  if (!(k > 1.0)) fail(Errc::invalid_argument, "rho_sequence: k must be > 1");
  if (!(c > 0.0)) fail(Errc::invalid_argument, "rho_sequence: C must be > 0");
  if (n_max < 1) fail(Errc::invalid_argument, "rho_sequence: n_max must be >= 1");
  RhoSequence seq;
  const double c2logk = c * c * std::log(k);
  double x = std::exp(-2.0 * c2logk);
  for (uint32_t n = 0; n < n_max; ++n) {
    if (!(x > 0.0)) {
      seq.truncated = true;
      break;
    }
    seq.values.push_back(x);
    const double factor = 1.0 - c2logk / std::abs(std::log(x));
    const double next = x * factor;
    // Keep the emitted sequence strictly decreasing and positive; once
    // rounding stalls the recurrence (deep in the denormals), cut it off.
    if (!(factor > 0.0) || !(next > 0.0) || next >= x) {
      seq.truncated = n + 1 < n_max;
      break;
    }
    x = next;
  }
  return seq;
}

}  // namespace ap3
