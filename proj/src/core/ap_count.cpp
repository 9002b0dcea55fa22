#include "core/ap_count.hpp"

#include "core/error.hpp"
#include "core/modmath.hpp"
#include "core/ntt.hpp"

namespace ap3 {

namespace {

// Above this cardinality the O(|S|^2) histogram loses to the transform.
constexpr uint64_t kDirectHistogramCap = uint64_t{1} << 14;
// Transform memory grows with q; past this we stay on the direct path.
constexpr uint64_t kTransformModulusCap = uint64_t{1} << 23;

APCountReport make_report(const ResidueSet& s, uint64_t total) {
  APCountReport r;
  r.q = s.modulus();
  r.size = s.size();
  r.total = total;
  r.trivial = s.size();  // a = b forces c = a, one triple per element
  r.nontrivial = total - r.trivial;
  r.mu = static_cast<double>(total) / (static_cast<double>(r.q) * static_cast<double>(r.q));
  return r;
}

}  // namespace

APCountReport count_3aps_naive(const ResidueSet& s) {
  const uint64_t q = s.modulus();
  const uint64_t inv2 = (q + 1) / 2;  // 2^-1 mod q for odd q
  uint64_t total = 0;
  for (uint64_t a : s.elements()) {
    for (uint64_t b : s.elements()) {
      const uint64_t c = mul_mod(add_mod(a, b, q), inv2, q);
      total += s.contains(c);
    }
  }
  return make_report(s, total);
}

std::vector<uint64_t> sumset_histogram(const ResidueSet& s, HistogramPath path) {
  const uint64_t q = s.modulus();
  if (path == HistogramPath::kAuto) {
    path = (s.size() <= kDirectHistogramCap || q > kTransformModulusCap) ? HistogramPath::kDirect
                                                                         : HistogramPath::kTransform;
  }
  std::vector<uint64_t> histogram(q, 0);
  if (path == HistogramPath::kDirect) {
    for (uint64_t a : s.elements()) {
      for (uint64_t b : s.elements()) {
        ++histogram[add_mod(a, b, q)];
      }
    }
    return histogram;
  }
  // Exact integer route: linear self-convolution of the indicator vector
  // over a 64-bit prime, folded back to period q. Coefficients are bounded
  // by |S| < q, far below the transform prime.
  std::vector<uint64_t> indicator(q, 0);
  for (uint64_t e : s.elements()) indicator[e] = 1;
  const std::vector<uint64_t> conv = ntt::self_convolution(indicator);
  for (size_t t = 0; t < conv.size(); ++t) {
    histogram[t >= q ? t - q : t] += conv[t];
  }
  return histogram;
}

APCountReport count_3aps_convolution(const ResidueSet& s, HistogramPath path) {
  const uint64_t q = s.modulus();
  const std::vector<uint64_t> histogram = sumset_histogram(s, path);
  uint64_t total = 0;
  for (uint64_t c : s.elements()) {
    total += histogram[add_mod(c, c, q)];
  }
  return make_report(s, total);
}

}  // namespace ap3
