#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/fourier.hpp"
#include "core/residue_set.hpp"

namespace ap3 {

/// Outcome of the dilation search. `j` is the multiplier that drags every
/// large frequency of S near 0; `h = j^-1 (mod q)` dilates S itself.
struct DilationSearchResult {
  bool found = false;
  uint64_t j = 0;
  uint64_t h = 0;
  double bound = 0.0;          // q^(1 - rho * epsilon^2)
  bool pigeonhole_ok = false;  // (q^(rho eps^2) + 1)^t < q
  bool vacuous = false;        // bound >= q/2: every j qualifies
  uint32_t equality_hits = 0;  // |j a_i| landed exactly on the bound
  std::vector<int64_t> positive_frequencies;
};

/// Smallest j in [1, q-1] such that every j * a_i (mod q) has least
/// absolute residue <= bound, for the given frequency list. nullopt when
/// the exhaustive scan finds none.
std::optional<uint64_t> admissible_dilation(uint64_t q, std::span<const int64_t> positive_frequencies,
                                            double bound);

/// Runs the scan over the large spectrum of S at threshold epsilon.
DilationSearchResult find_rectifying_dilation(const ResidueSet& s, double epsilon);

/// W = (4v)^-1 * S' + k (mod q). Triple counts are invariant under this.
ResidueSet build_w(const ResidueSet& s_prime, uint64_t k, uint64_t v);

/// Check that every nonzero large frequency a of W satisfies
/// |a| <= 4 v q^(1 - rho eps^2) and 4v | a.
struct RectificationCertificate {
  uint64_t h = 0;  // filled by pipelines that know the dilation
  uint64_t j = 0;
  uint64_t k = 0;
  uint64_t v = 1;
  double epsilon = 0.0;
  double rho = 0.0;
  double freq_bound = 0.0;  // q^(1 - rho eps^2)
  bool verified = false;
  bool vacuous = false;  // freq_bound >= q/2: the dilation scan constrained nothing
  uint32_t equality_hits = 0;
  std::vector<int64_t> large_frequencies;  // nonzero, symmetric residues
  std::vector<int64_t> violators;
};

RectificationCertificate spectral_certificate(const ResidueSet& w, double epsilon, double rho,
                                              uint64_t v);

}  // namespace ap3
