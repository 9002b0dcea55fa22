#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "core/residue_set.hpp"

namespace ap3 {

/// Full table of exponential sums f_S(a/q) = sum_{s in S} e(sa/q) with
/// e(u) = exp(2*pi*i*u). Coefficients are addressed by the symmetric
/// frequency a in (-q/2, q/2); storage uses the standard residue index.
class Spectrum {
 public:
  Spectrum(uint64_t q, uint64_t set_size, std::vector<std::complex<double>> table);

  uint64_t modulus() const noexcept { return q_; }
  uint64_t set_size() const noexcept { return set_size_; }

  /// f_S(a/q) for any integer a (reduced mod q).
  std::complex<double> coeff(int64_t a) const noexcept {
    int64_t r = a % static_cast<int64_t>(q_);
    if (r < 0) r += static_cast<int64_t>(q_);
    return table_[static_cast<size_t>(r)];
  }

  /// Symmetric index range: a in [min_freq(), max_freq()].
  int64_t min_freq() const noexcept { return -static_cast<int64_t>((q_ - 1) / 2); }
  int64_t max_freq() const noexcept { return static_cast<int64_t>((q_ - 1) / 2); }

  /// |sum |f|^2 - q*|S|| / (q*|S|); 0 for the empty set.
  double parseval_residual() const noexcept { return parseval_residual_; }

  const std::vector<std::complex<double>>& table() const noexcept { return table_; }

 private:
  uint64_t q_;
  uint64_t set_size_;
  std::vector<std::complex<double>> table_;
  double parseval_residual_;
};

enum class DftPath { kAuto, kDirect, kTransform };

/// All q coefficients. Direct summation below 2^12, Bluestein transform
/// above; both paths agree to working precision.
Spectrum dft(const ResidueSet& s, DftPath path = DftPath::kAuto);

/// f_S(u) by direct summation, for real u (customarily in [-1/2, 1/2]).
std::complex<double> eval_at_real(const ResidueSet& s, double u);

/// Frequencies a with |f_S(a/q)| > epsilon * |S|, as symmetric residues
/// sorted ascending. a = 0 is always present for a nonempty set. The
/// Parseval bound caps the count at 1/(rho * epsilon^2) + 1.
struct LargeSpectrum {
  double epsilon = 0.0;
  std::vector<int64_t> frequencies;

  std::vector<int64_t> positive() const;
  double cardinality_bound(double rho) const;
};

LargeSpectrum large_spectrum(const ResidueSet& s, double epsilon);
LargeSpectrum large_spectrum(const Spectrum& spec, double epsilon);

/// Evaluates (1/q) * sum_a f(a/q)^2 * f(-2a/q) and compares it to the
/// exact integer triple count.
struct FourierCountCheck {
  double value = 0.0;      // real part of the Fourier-side expression
  double imag_abs = 0.0;   // |imaginary part|, ideally ~0
  uint64_t exact_total = 0;
  double residual = 0.0;   // |value - exact_total|
};

FourierCountCheck fourier_count_identity(const ResidueSet& s);

struct BoundCheck {
  double lhs = 0.0;
  double bound = 0.0;
  bool ok = false;
};

/// |sum_{j=N+1}^{N+H} e(jt)| against min(H, 1/(2|t|)); t = 0 uses the H
/// branch only.
BoundCheck dirichlet_bound_check(uint64_t n0, uint64_t h, double t);

/// |sum over W intersect [N+1, N+H] of e(sa/q)| against
/// 2|W| (epsilon*H / (rho*q))^{1/3}. The verdict is reported, not
/// asserted: the bound's hypotheses are asymptotic.
BoundCheck short_sum_check(const ResidueSet& w, int64_t a, uint64_t n0, uint64_t h, double epsilon,
                           double rho);

}  // namespace ap3
