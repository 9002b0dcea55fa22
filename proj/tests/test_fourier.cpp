#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "core/ap_count.hpp"
#include "core/error.hpp"
#include "core/fourier.hpp"
#include "core/residue_set.hpp"
#include "core/rng.hpp"

using namespace ap3;

TEST_CASE("dft trivial values") {
  const Spectrum full = dft(ResidueSet::full_set(101));
  CHECK(std::abs(full.coeff(0) - std::complex<double>(101.0, 0.0)) < 1e-9);
  for (int64_t a = full.min_freq(); a <= full.max_freq(); ++a) {
    if (a != 0) CHECK(std::abs(full.coeff(a)) < 1e-9);
  }
  const Spectrum delta = dft(ResidueSet(7, {0}));
  for (int64_t a = delta.min_freq(); a <= delta.max_freq(); ++a) {
    CHECK(std::abs(delta.coeff(a) - std::complex<double>(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("parseval and conjugate symmetry") {
  SplitMix64 rng(41);
  for (uint64_t q : {4093ull, 4099ull}) {  // straddles the transform switch
    for (int i = 0; i < 3; ++i) {
      const ResidueSet s = ResidueSet::random_set(q, 1 + rng.below(q), rng.next());
      const Spectrum spec = dft(s);
      CHECK(spec.parseval_residual() < 1e-9);
      CHECK(std::abs(spec.coeff(0).real() - static_cast<double>(s.size())) < 1e-6);
      for (int64_t a = 1; a <= spec.max_freq(); a += 97) {
        CHECK(std::abs(spec.coeff(-a) - std::conj(spec.coeff(a))) < 1e-9 * s.size());
      }
    }
  }
}

TEST_CASE("direct and transform paths agree") {
  SplitMix64 rng(4242);
  const uint64_t q = 1009;
  const ResidueSet s = ResidueSet::random_set(q, 200, rng.next());
  const Spectrum a = dft(s, DftPath::kDirect);
  const Spectrum b = dft(s, DftPath::kTransform);
  for (int64_t k = a.min_freq(); k <= a.max_freq(); ++k) {
    CHECK(std::abs(a.coeff(k) - b.coeff(k)) < 1e-7);
  }
}

TEST_CASE("eval_at_real consistency") {
  const ResidueSet s(101, {3, 17, 40, 77});
  CHECK(std::abs(eval_at_real(s, 0.0) - std::complex<double>(4.0, 0.0)) < 1e-12);
  const Spectrum spec = dft(s);
  for (int64_t a : {1, 5, -13, 50}) {
    const double u = static_cast<double>(a) / 101.0;
    CHECK(std::abs(eval_at_real(s, u) - spec.coeff(a)) < 1e-9 * 4);
  }
  const ResidueSet pair(7, {0, 1});
  CHECK(std::abs(eval_at_real(pair, 0.5)) < 1e-12);  // 1 + e(1/2) = 0
}

TEST_CASE("large_spectrum basics") {
  CHECK(large_spectrum(ResidueSet::full_set(31), 0.5).frequencies ==
        std::vector<int64_t>{0});
  // An arithmetic progression keeps only a = 0 as epsilon approaches 1.
  std::vector<uint64_t> ap;
  for (uint64_t i = 0; i < 10; ++i) ap.push_back((5 * i) % 31);
  CHECK(large_spectrum(ResidueSet(31, ap), 0.999).frequencies == std::vector<int64_t>{0});
  CHECK_THROWS_AS(large_spectrum(ResidueSet::empty_set(7), 0.5), Error);
  CHECK_THROWS_AS(large_spectrum(ResidueSet(7, {1}), 0.0), Error);
}

TEST_CASE("large_spectrum cardinality bound") {
  SplitMix64 rng(9);
  const uint64_t q = 1009;
  for (int i = 0; i < 10; ++i) {
    const uint64_t m = 1 + rng.below(q - 1);
    const ResidueSet s = ResidueSet::random_set(q, m, rng.next());
    const double rho = s.density();
    for (double eps : {0.1, 0.3, 0.7}) {
      const LargeSpectrum ls = large_spectrum(s, eps);
      CHECK(static_cast<double>(ls.frequencies.size()) <= ls.cardinality_bound(rho));
      // symmetric: a large <=> -a large
      for (int64_t a : ls.frequencies) {
        if (a != 0) {
          CHECK(std::find(ls.frequencies.begin(), ls.frequencies.end(), -a) !=
                ls.frequencies.end());
        }
      }
    }
  }
  const ResidueSet s = ResidueSet::random_set(1009, 100, 77);
  const LargeSpectrum ls = large_spectrum(s, 0.3);
  CHECK(static_cast<double>(ls.frequencies.size()) <=
        std::floor(1.0 / (s.density() * 0.09)) + 1.0);
}

TEST_CASE("fourier count identity") {
  CHECK(fourier_count_identity(ResidueSet::empty_set(7)).residual == 0.0);

  const FourierCountCheck small = fourier_count_identity(ResidueSet(7, {1, 2, 3}));
  CHECK(small.exact_total == 5);
  CHECK(small.residual < 1e-6 * 49);
  CHECK(small.imag_abs < 1e-6 * 49);

  const FourierCountCheck full = fourier_count_identity(ResidueSet::full_set(101));
  CHECK(full.exact_total == 10201);
  CHECK(full.residual < 1e-6 * 101 * 101);

  SplitMix64 rng(31337);
  for (uint64_t q : {101ull, 1009ull, 4099ull}) {
    const ResidueSet s = ResidueSet::random_set(q, 1 + rng.below(q), rng.next());
    const FourierCountCheck check = fourier_count_identity(s);
    CHECK(check.residual < 1e-6 * static_cast<double>(q) * static_cast<double>(q));
    CHECK(check.imag_abs < 1e-6 * static_cast<double>(q) * static_cast<double>(q));
  }
}

TEST_CASE("dirichlet kernel bound") {
  CHECK(dirichlet_bound_check(0, 10, 0.5).bound == doctest::Approx(1.0));
  CHECK(dirichlet_bound_check(0, 10, 0.0).lhs == doctest::Approx(10.0));
  CHECK(dirichlet_bound_check(0, 10, 0.0).ok);
  SplitMix64 rng(271828);
  for (int i = 0; i < 10000; ++i) {
    const uint64_t n0 = rng.below(1 << 20);
    const uint64_t h = 1 + rng.below(1 << 10);
    const double t = (rng.unit() - 0.5);
    CHECK(dirichlet_bound_check(n0, h, t).ok);
  }
}

TEST_CASE("short sum check") {
  const ResidueSet w(101, {5, 20, 55, 90});
  // Empty window.
  const BoundCheck empty = short_sum_check(w, 3, 29, 10, 0.3, 0.04);
  CHECK(empty.lhs == 0.0);
  CHECK(empty.ok);
  // a = 0: all phases are 1, lhs equals the in-window count.
  const BoundCheck zero = short_sum_check(w, 0, 0, 60, 0.3, 0.04);
  CHECK(zero.lhs == doctest::Approx(3.0));
  CHECK_THROWS_AS(short_sum_check(w, 1, 95, 10, 0.3, 0.04), Error);
}
