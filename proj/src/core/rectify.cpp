#include "core/rectify.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/modmath.hpp"

namespace ap3 {

namespace {

uint64_t least_abs_residue(uint64_t x, uint64_t q) {
  x %= q;
  return x <= q - x ? x : q - x;
}

}  // namespace

std::optional<uint64_t> admissible_dilation(uint64_t q, std::span<const int64_t> positive_frequencies,
                                            double bound) {
  for (uint64_t j = 1; j < q; ++j) {
    bool ok = true;
    for (int64_t a : positive_frequencies) {
      const uint64_t residue = least_abs_residue(mul_mod(j, static_cast<uint64_t>(a), q), q);
      if (static_cast<double>(residue) > bound) {
        ok = false;
        break;
      }
    }
    if (ok) return j;
  }
  return std::nullopt;
}

DilationSearchResult find_rectifying_dilation(const ResidueSet& s, double epsilon) {
  const uint64_t q = s.modulus();
  const double rho = s.density();
  DilationSearchResult result;
  result.bound = std::pow(static_cast<double>(q), 1.0 - rho * epsilon * epsilon);
  result.vacuous = result.bound >= static_cast<double>(q) / 2.0;

  const LargeSpectrum spectrum = large_spectrum(s, epsilon);
  result.positive_frequencies = spectrum.positive();
  const size_t t = result.positive_frequencies.size();
  result.pigeonhole_ok =
      static_cast<double>(t) *
          std::log(std::pow(static_cast<double>(q), rho * epsilon * epsilon) + 1.0) <
      std::log(static_cast<double>(q));

  const auto j = admissible_dilation(q, result.positive_frequencies, result.bound);
  if (!j) return result;
  result.found = true;
  result.j = *j;
  result.h = mod_inverse(*j, q);
  for (int64_t a : result.positive_frequencies) {
    const uint64_t residue = least_abs_residue(mul_mod(*j, static_cast<uint64_t>(a), q), q);
    if (static_cast<double>(residue) == result.bound) ++result.equality_hits;
  }
  return result;
}

ResidueSet build_w(const ResidueSet& s_prime, uint64_t k, uint64_t v) {
  const uint64_t q = s_prime.modulus();
  if (v == 0) fail(Errc::invalid_argument, "build_w: v must be >= 1");
  const uint64_t four_v = mul_mod(4 % q, v, q);
  if (four_v == 0) fail(Errc::invalid_argument, "build_w: 4v is divisible by the modulus");
  return affine_apply(s_prime, AffineMap(mod_inverse(four_v, q), k % q, q));
}

RectificationCertificate spectral_certificate(const ResidueSet& w, double epsilon, double rho,
                                              uint64_t v) {
  const uint64_t q = w.modulus();
  if (v == 0 || mul_mod(4 % q, v, q) == 0) {
    fail(Errc::invalid_argument, "spectral_certificate: invalid v for this modulus");
  }
  RectificationCertificate cert;
  cert.v = v;
  cert.epsilon = epsilon;
  cert.rho = rho;
  cert.freq_bound = std::pow(static_cast<double>(q), 1.0 - rho * epsilon * epsilon);
  cert.vacuous = cert.freq_bound >= static_cast<double>(q) / 2.0;
  const double w_bound = 4.0 * static_cast<double>(v) * cert.freq_bound;

  if (w.size() > 0) {
    const LargeSpectrum spectrum = large_spectrum(w, epsilon);
    for (int64_t a : spectrum.frequencies) {
      if (a == 0) continue;
      cert.large_frequencies.push_back(a);
      const double abs_a = std::abs(static_cast<double>(a));
      const bool magnitude_ok = abs_a <= w_bound;
      const bool divisible = static_cast<uint64_t>(std::llabs(a)) % (4 * v) == 0;
      if (abs_a == w_bound) ++cert.equality_hits;
      if (!magnitude_ok || !divisible) cert.violators.push_back(a);
    }
  }
  cert.verified = cert.violators.empty();
  return cert;
}

}  // namespace ap3
