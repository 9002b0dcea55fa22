#include "core/fourier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "core/ap_count.hpp"
#include "core/error.hpp"
#include "core/modmath.hpp"

namespace ap3 {

namespace {

constexpr uint64_t kDirectDftCap = uint64_t{1} << 12;

std::complex<double> unit_phase(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

// e(x * y) with the product reduced mod 1 in extended precision; keeps
// phases accurate when x * y is large.
std::complex<double> unit_phase_product(long double x, long double y) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> * std::fmod(x * y, 1.0L);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

// Roots e(k/q) for k in [0, q).
std::vector<std::complex<double>> root_table(uint64_t q) {
  std::vector<std::complex<double>> roots(q);
  for (uint64_t k = 0; k < q; ++k) {
    roots[k] = unit_phase(static_cast<double>(k) / static_cast<double>(q));
  }
  return roots;
}

std::vector<std::complex<double>> dft_direct(const ResidueSet& s) {
  const uint64_t q = s.modulus();
  const auto roots = root_table(q);
  std::vector<std::complex<double>> table(q, {0.0, 0.0});
  // Element-major: for fixed s the index s*k mod q advances by s per k.
  for (uint64_t e : s.elements()) {
    uint64_t r = 0;
    for (uint64_t k = 0; k < q; ++k) {
      table[k] += roots[r];
      r += e;
      if (r >= q) r -= q;
    }
  }
  return table;
}

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double step = (inverse ? -2.0 : 2.0) * std::numbers::pi / static_cast<double>(len);
    std::vector<std::complex<double>> w(len / 2);
    for (size_t k = 0; k < len / 2; ++k) {
      w[k] = {std::cos(step * static_cast<double>(k)), std::sin(step * static_cast<double>(k))};
    }
    for (size_t i = 0; i < n; i += len) {
      for (size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w[k];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= scale;
  }
}

// Bluestein's chirp transform: F[k] = sum_j x_j e(+jk/q) for arbitrary q.
std::vector<std::complex<double>> dft_bluestein(const ResidueSet& s) {
  const uint64_t q = s.modulus();
  // chirp[n] = e(n^2 / (2q)), computed from n^2 mod 2q to keep the phase
  // argument small.
  std::vector<std::complex<double>> chirp(q);
  const uint64_t period = 2 * q;
  for (uint64_t n = 0; n < q; ++n) {
    const uint64_t sq = mul_mod(n, n, period);
    chirp[n] = unit_phase(static_cast<double>(sq) / static_cast<double>(period));
  }
  const size_t m = std::bit_ceil(static_cast<size_t>(2 * q - 1));
  std::vector<std::complex<double>> a(m, {0.0, 0.0});
  for (uint64_t e : s.elements()) a[e] = chirp[e];
  std::vector<std::complex<double>> b(m, {0.0, 0.0});
  b[0] = std::conj(chirp[0]);
  for (uint64_t n = 1; n < q; ++n) {
    b[n] = std::conj(chirp[n]);
    b[m - n] = std::conj(chirp[n]);
  }
  fft_pow2(a, false);
  fft_pow2(b, false);
  for (size_t i = 0; i < m; ++i) a[i] *= b[i];
  fft_pow2(a, true);
  std::vector<std::complex<double>> table(q);
  for (uint64_t k = 0; k < q; ++k) table[k] = chirp[k] * a[k];
  return table;
}

}  // namespace

Spectrum::Spectrum(uint64_t q, uint64_t set_size, std::vector<std::complex<double>> table)
    : q_(q), set_size_(set_size), table_(std::move(table)) {
  if (table_.size() != q_) fail(Errc::internal, "spectrum table size mismatch");
  double energy = 0.0;
  for (const auto& c : table_) energy += std::norm(c);
  const double expected = static_cast<double>(q_) * static_cast<double>(set_size_);
  parseval_residual_ = set_size_ == 0 ? 0.0 : std::abs(energy - expected) / expected;
}

Spectrum dft(const ResidueSet& s, DftPath path) {
  if (path == DftPath::kAuto) {
    path = s.modulus() < kDirectDftCap ? DftPath::kDirect : DftPath::kTransform;
  }
  auto table = path == DftPath::kDirect ? dft_direct(s) : dft_bluestein(s);
  return Spectrum(s.modulus(), s.size(), std::move(table));
}

std::complex<double> eval_at_real(const ResidueSet& s, double u) {
  std::complex<double> sum{0.0, 0.0};
  for (uint64_t e : s.elements()) {
    sum += unit_phase_product(static_cast<long double>(e), u);
  }
  return sum;
}

std::vector<int64_t> LargeSpectrum::positive() const {
  std::vector<int64_t> out;
  for (int64_t a : frequencies) {
    if (a > 0) out.push_back(a);
  }
  return out;
}

double LargeSpectrum::cardinality_bound(double rho) const {
  return 1.0 / (rho * epsilon * epsilon) + 1.0;
}

LargeSpectrum large_spectrum(const Spectrum& spec, double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    fail(Errc::invalid_argument, "large_spectrum: epsilon must lie in (0, 1]");
  }
  if (spec.set_size() == 0) {
    fail(Errc::invalid_argument, "large_spectrum: undefined threshold for an empty set");
  }
  LargeSpectrum out;
  out.epsilon = epsilon;
  const double threshold = epsilon * static_cast<double>(spec.set_size());
  for (int64_t a = spec.min_freq(); a <= spec.max_freq(); ++a) {
    if (a == 0 || std::abs(spec.coeff(a)) > threshold) out.frequencies.push_back(a);
  }
  return out;
}

LargeSpectrum large_spectrum(const ResidueSet& s, double epsilon) {
  return large_spectrum(dft(s), epsilon);
}

FourierCountCheck fourier_count_identity(const ResidueSet& s) {
  const uint64_t q = s.modulus();
  const Spectrum spec = dft(s);
  std::complex<double> sum{0.0, 0.0};
  for (int64_t a = spec.min_freq(); a <= spec.max_freq(); ++a) {
    const std::complex<double> f = spec.coeff(a);
    sum += f * f * spec.coeff(-2 * a);
  }
  sum /= static_cast<double>(q);
  FourierCountCheck check;
  check.value = sum.real();
  check.imag_abs = std::abs(sum.imag());
  check.exact_total = count_3aps_convolution(s).total;
  check.residual = std::abs(check.value - static_cast<double>(check.exact_total));
  return check;
}

BoundCheck dirichlet_bound_check(uint64_t n0, uint64_t h, double t) {
  if (h < 1) fail(Errc::invalid_argument, "dirichlet_bound_check: H must be >= 1");
  if (!(t >= -0.5 && t <= 0.5)) {
    fail(Errc::invalid_argument, "dirichlet_bound_check: t must lie in [-1/2, 1/2]");
  }
  std::complex<double> sum{0.0, 0.0};
  for (uint64_t j = n0 + 1; j <= n0 + h; ++j) {
    sum += unit_phase_product(static_cast<long double>(j), t);
  }
  BoundCheck check;
  check.lhs = std::abs(sum);
  const double hh = static_cast<double>(h);
  check.bound = t == 0.0 ? hh : std::min(hh, 1.0 / (2.0 * std::abs(t)));
  check.ok = check.lhs <= check.bound + 1e-12;
  return check;
}

BoundCheck short_sum_check(const ResidueSet& w, int64_t a, uint64_t n0, uint64_t h, double epsilon,
                           double rho) {
  const uint64_t q = w.modulus();
  if (h < 1 || n0 + h > q - 1) {
    fail(Errc::range, "short_sum_check: window [N+1, N+H] must lie inside [0, q-1]");
  }
  int64_t ar = a % static_cast<int64_t>(q);
  if (ar < 0) ar += static_cast<int64_t>(q);
  std::complex<double> sum{0.0, 0.0};
  const auto& elements = w.elements();
  const auto begin = std::lower_bound(elements.begin(), elements.end(), n0 + 1);
  const auto end = std::upper_bound(begin, elements.end(), n0 + h);
  for (auto it = begin; it != end; ++it) {
    const uint64_t turns = mul_mod(*it, static_cast<uint64_t>(ar), q);
    sum += unit_phase(static_cast<double>(turns) / static_cast<double>(q));
  }
  BoundCheck check;
  check.lhs = std::abs(sum);
  check.bound = 2.0 * static_cast<double>(w.size()) *
                std::cbrt(epsilon * static_cast<double>(h) / (rho * static_cast<double>(q)));
  check.ok = check.lhs <= check.bound + 1e-12;
  return check;
}

}  // namespace ap3
