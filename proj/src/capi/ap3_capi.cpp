#include "ap3/ap3.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/ap_count.hpp"
#include "core/behrend.hpp"
#include "core/error.hpp"
#include "core/fourier.hpp"
#include "core/modmath.hpp"
#include "core/rectify.hpp"
#include "core/residue_set.hpp"
#include "core/search.hpp"
#include "core/serialize.hpp"
#include "core/set_io.hpp"
#include "core/transfer.hpp"
#include "core/version.hpp"

struct ap3_set {
  ap3::ResidueSet impl;
};

struct ap3_spectrum {
  ap3::Spectrum impl;
};

struct ap3_behrend {
  ap3::BehrendSet impl;
};

namespace {

thread_local std::string g_last_error;

ap3_status status_from(ap3::Errc code) {
  switch (code) {
    case ap3::Errc::invalid_argument:
      return AP3_ERR_INVALID_ARGUMENT;
    case ap3::Errc::range:
      return AP3_ERR_RANGE;
    case ap3::Errc::budget:
      return AP3_ERR_BUDGET;
    case ap3::Errc::io:
      return AP3_ERR_IO;
    case ap3::Errc::precondition:
      return AP3_ERR_PRECONDITION;
    case ap3::Errc::internal:
      return AP3_ERR_INTERNAL;
  }
  return AP3_ERR_INTERNAL;
}

template <typename Fn>
ap3_status guarded(Fn&& fn) {
  try {
    fn();
    return AP3_OK;
  } catch (const ap3::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return AP3_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AP3_ERR_INTERNAL;
  }
}

ap3_status require(bool condition, const char* message) {
  if (condition) return AP3_OK;
  g_last_error = message;
  return AP3_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

ap3_count_report convert(const ap3::APCountReport& r) {
  return ap3_count_report{r.q, r.size, r.total, r.trivial, r.nontrivial, r.mu};
}

ap3::LocalSearchConfig convert(const ap3_search_config* config) {
  ap3::LocalSearchConfig out;
  if (config == nullptr) return out;
  if (config->iterations != 0) out.iterations = config->iterations;
  if (config->restarts != 0) out.restarts = config->restarts;
  out.t0 = config->t0;
  if (config->cooling > 0.0) out.cooling = config->cooling;
  out.anneal = config->anneal != 0;
  out.recheck_interval = config->recheck_interval;
  out.threads = config->threads;
  return out;
}

}  // namespace

extern "C" {

const char* ap3_version(void) { return ap3::kVersion; }

const char* ap3_status_name(ap3_status status) {
  switch (status) {
    case AP3_OK:
      return "ok";
    case AP3_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case AP3_ERR_RANGE:
      return "range error";
    case AP3_ERR_BUDGET:
      return "budget exceeded";
    case AP3_ERR_IO:
      return "io error";
    case AP3_ERR_PRECONDITION:
      return "precondition not met";
    case AP3_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* ap3_last_error(void) { return g_last_error.c_str(); }

void ap3_string_free(char* text) { std::free(text); }

/* -------------------------------- sets ---------------------------- */

ap3_status ap3_set_create(uint64_t q, const uint64_t* elements, size_t count, ap3_set** out) {
  if (ap3_status s = require(out != nullptr && (elements != nullptr || count == 0),
                             "ap3_set_create: null argument"))
    return s;
  return guarded([&] {
    *out = new ap3_set{ap3::ResidueSet(q, std::vector<uint64_t>(elements, elements + count))};
  });
}

ap3_status ap3_set_full(uint64_t q, ap3_set** out) {
  if (ap3_status s = require(out != nullptr, "ap3_set_full: null output")) return s;
  return guarded([&] { *out = new ap3_set{ap3::ResidueSet::full_set(q)}; });
}

ap3_status ap3_set_random(uint64_t q, uint64_t m, uint64_t seed, ap3_set** out) {
  if (ap3_status s = require(out != nullptr, "ap3_set_random: null output")) return s;
  return guarded([&] { *out = new ap3_set{ap3::ResidueSet::random_set(q, m, seed)}; });
}

ap3_status ap3_set_from_json(const char* text, ap3_set** out) {
  if (ap3_status s = require(text != nullptr && out != nullptr, "ap3_set_from_json: null argument"))
    return s;
  return guarded([&] { *out = new ap3_set{ap3::read_set_json(text)}; });
}

ap3_status ap3_set_to_json(const ap3_set* set, char** json_out) {
  if (ap3_status s =
          require(set != nullptr && json_out != nullptr, "ap3_set_to_json: null argument"))
    return s;
  return guarded([&] { *json_out = copy_string(ap3::write_set_json(set->impl)); });
}

void ap3_set_free(ap3_set* set) { delete set; }

uint64_t ap3_set_modulus(const ap3_set* set) { return set == nullptr ? 0 : set->impl.modulus(); }

uint64_t ap3_set_size(const ap3_set* set) { return set == nullptr ? 0 : set->impl.size(); }

int ap3_set_contains(const ap3_set* set, uint64_t element) {
  return set != nullptr && set->impl.contains(element) ? 1 : 0;
}

ap3_status ap3_set_elements(const ap3_set* set, uint64_t* buffer, size_t buffer_len) {
  if (ap3_status s = require(set != nullptr, "ap3_set_elements: null set")) return s;
  if (ap3_status s = require(buffer != nullptr || set->impl.size() == 0,
                             "ap3_set_elements: null buffer"))
    return s;
  if (buffer_len < set->impl.size()) {
    g_last_error = "ap3_set_elements: buffer too small";
    return AP3_ERR_RANGE;
  }
  const auto& elements = set->impl.elements();
  std::memcpy(buffer, elements.data(), elements.size() * sizeof(uint64_t));
  return AP3_OK;
}

/* --------------------------- modular utils ------------------------ */

int ap3_is_prime(uint64_t n) { return ap3::is_prime_u64(n) ? 1 : 0; }

ap3_status ap3_mod_inverse(uint64_t a, uint64_t q, uint64_t* out) {
  if (ap3_status s = require(out != nullptr, "ap3_mod_inverse: null output")) return s;
  return guarded([&] { *out = ap3::mod_inverse(a, q); });
}

ap3_status ap3_affine_apply(const ap3_set* set, uint64_t scale, uint64_t offset, ap3_set** out) {
  if (ap3_status s =
          require(set != nullptr && out != nullptr, "ap3_affine_apply: null argument"))
    return s;
  return guarded([&] {
    *out = new ap3_set{
        ap3::affine_apply(set->impl, ap3::AffineMap(scale, offset, set->impl.modulus()))};
  });
}

ap3_status ap3_shift_intersection(const ap3_set* set, uint64_t b, uint64_t* out) {
  if (ap3_status s =
          require(set != nullptr && out != nullptr, "ap3_shift_intersection: null argument"))
    return s;
  return guarded([&] { *out = ap3::shift_intersection(set->impl, b); });
}

ap3_status ap3_find_prime_in_interval(uint64_t x, double theta, uint64_t* prime_out, int* found) {
  if (ap3_status s = require(prime_out != nullptr && found != nullptr,
                             "ap3_find_prime_in_interval: null output"))
    return s;
  return guarded([&] {
    const auto p = ap3::find_prime_in_interval(x, theta);
    *found = p.has_value() ? 1 : 0;
    *prime_out = p.value_or(0);
  });
}

/* ------------------------------ counting -------------------------- */

ap3_status ap3_count_naive(const ap3_set* set, ap3_count_report* report) {
  if (ap3_status s = require(set != nullptr && report != nullptr, "ap3_count_naive: null argument"))
    return s;
  return guarded([&] { *report = convert(ap3::count_3aps_naive(set->impl)); });
}

ap3_status ap3_count_convolution(const ap3_set* set, ap3_count_report* report) {
  if (ap3_status s =
          require(set != nullptr && report != nullptr, "ap3_count_convolution: null argument"))
    return s;
  return guarded([&] { *report = convert(ap3::count_3aps_convolution(set->impl)); });
}

ap3_status ap3_delta_count(const ap3_set* set, uint64_t out_elem, uint64_t in_elem,
                           int64_t* delta) {
  if (ap3_status s = require(set != nullptr && delta != nullptr, "ap3_delta_count: null argument"))
    return s;
  return guarded([&] { *delta = ap3::delta_count(set->impl, out_elem, in_elem); });
}

/* ------------------------------ fourier --------------------------- */

ap3_status ap3_dft(const ap3_set* set, ap3_spectrum** out) {
  if (ap3_status s = require(set != nullptr && out != nullptr, "ap3_dft: null argument")) return s;
  return guarded([&] { *out = new ap3_spectrum{ap3::dft(set->impl)}; });
}

void ap3_spectrum_free(ap3_spectrum* spectrum) { delete spectrum; }

uint64_t ap3_spectrum_modulus(const ap3_spectrum* spectrum) {
  return spectrum == nullptr ? 0 : spectrum->impl.modulus();
}

ap3_status ap3_spectrum_coeff(const ap3_spectrum* spectrum, int64_t a, double* re, double* im) {
  if (ap3_status s = require(spectrum != nullptr && re != nullptr && im != nullptr,
                             "ap3_spectrum_coeff: null argument"))
    return s;
  const std::complex<double> c = spectrum->impl.coeff(a);
  *re = c.real();
  *im = c.imag();
  return AP3_OK;
}

double ap3_spectrum_parseval_residual(const ap3_spectrum* spectrum) {
  return spectrum == nullptr ? 0.0 : spectrum->impl.parseval_residual();
}

ap3_status ap3_spectrum_to_csv(const ap3_spectrum* spectrum, char** csv_out) {
  if (ap3_status s = require(spectrum != nullptr && csv_out != nullptr,
                             "ap3_spectrum_to_csv: null argument"))
    return s;
  return guarded([&] { *csv_out = copy_string(ap3::spectrum_to_csv(spectrum->impl)); });
}

ap3_status ap3_eval_at_real(const ap3_set* set, double u, double* re, double* im) {
  if (ap3_status s = require(set != nullptr && re != nullptr && im != nullptr,
                             "ap3_eval_at_real: null argument"))
    return s;
  return guarded([&] {
    const std::complex<double> c = ap3::eval_at_real(set->impl, u);
    *re = c.real();
    *im = c.imag();
  });
}

ap3_status ap3_large_spectrum(const ap3_set* set, double epsilon, int64_t* frequencies,
                              size_t capacity, size_t* count_out) {
  if (ap3_status s = require(set != nullptr && count_out != nullptr &&
                                 (frequencies != nullptr || capacity == 0),
                             "ap3_large_spectrum: null argument"))
    return s;
  return guarded([&] {
    const ap3::LargeSpectrum ls = ap3::large_spectrum(set->impl, epsilon);
    *count_out = ls.frequencies.size();
    const size_t n = std::min(capacity, ls.frequencies.size());
    for (size_t i = 0; i < n; ++i) frequencies[i] = ls.frequencies[i];
  });
}

ap3_status ap3_fourier_count_identity(const ap3_set* set, double* value, double* residual,
                                      double* imag_abs) {
  if (ap3_status s = require(set != nullptr && value != nullptr && residual != nullptr &&
                                 imag_abs != nullptr,
                             "ap3_fourier_count_identity: null argument"))
    return s;
  return guarded([&] {
    const ap3::FourierCountCheck check = ap3::fourier_count_identity(set->impl);
    *value = check.value;
    *residual = check.residual;
    *imag_abs = check.imag_abs;
  });
}

ap3_status ap3_dirichlet_bound_check(uint64_t n0, uint64_t h, double t, double* lhs, double* bound,
                                     int* ok) {
  if (ap3_status s = require(lhs != nullptr && bound != nullptr && ok != nullptr,
                             "ap3_dirichlet_bound_check: null output"))
    return s;
  return guarded([&] {
    const ap3::BoundCheck check = ap3::dirichlet_bound_check(n0, h, t);
    *lhs = check.lhs;
    *bound = check.bound;
    *ok = check.ok ? 1 : 0;
  });
}

ap3_status ap3_short_sum_check(const ap3_set* set, int64_t a, uint64_t n0, uint64_t h,
                               double epsilon, double rho, double* lhs, double* bound, int* ok) {
  if (ap3_status s = require(set != nullptr && lhs != nullptr && bound != nullptr && ok != nullptr,
                             "ap3_short_sum_check: null argument"))
    return s;
  return guarded([&] {
    const ap3::BoundCheck check = ap3::short_sum_check(set->impl, a, n0, h, epsilon, rho);
    *lhs = check.lhs;
    *bound = check.bound;
    *ok = check.ok ? 1 : 0;
  });
}

/* ---------------------------- rectification ----------------------- */

ap3_status ap3_find_rectifying_dilation(const ap3_set* set, double epsilon, uint64_t* j,
                                        uint64_t* h, int* found, int* pigeonhole_ok, int* vacuous) {
  if (ap3_status s = require(set != nullptr && j != nullptr && h != nullptr && found != nullptr &&
                                 pigeonhole_ok != nullptr && vacuous != nullptr,
                             "ap3_find_rectifying_dilation: null argument"))
    return s;
  return guarded([&] {
    const ap3::DilationSearchResult r = ap3::find_rectifying_dilation(set->impl, epsilon);
    *found = r.found ? 1 : 0;
    *j = r.j;
    *h = r.h;
    *pigeonhole_ok = r.pigeonhole_ok ? 1 : 0;
    *vacuous = r.vacuous ? 1 : 0;
  });
}

ap3_status ap3_build_w(const ap3_set* s_prime, uint64_t k, uint64_t v, ap3_set** out) {
  if (ap3_status s = require(s_prime != nullptr && out != nullptr, "ap3_build_w: null argument"))
    return s;
  return guarded([&] { *out = new ap3_set{ap3::build_w(s_prime->impl, k, v)}; });
}

ap3_status ap3_spectral_certificate(const ap3_set* w, double epsilon, double rho, uint64_t v,
                                    int* verified, int* vacuous, char** json_out) {
  if (ap3_status s = require(w != nullptr && verified != nullptr && vacuous != nullptr &&
                                 json_out != nullptr,
                             "ap3_spectral_certificate: null argument"))
    return s;
  return guarded([&] {
    const ap3::RectificationCertificate cert =
        ap3::spectral_certificate(w->impl, epsilon, rho, v);
    *verified = cert.verified ? 1 : 0;
    *vacuous = cert.vacuous ? 1 : 0;
    *json_out = copy_string(ap3::to_json_text(cert));
  });
}

/* ------------------------------ behrend --------------------------- */

ap3_status ap3_behrend_construct(uint64_t x, ap3_behrend** out) {
  if (ap3_status s = require(out != nullptr, "ap3_behrend_construct: null output")) return s;
  return guarded([&] { *out = new ap3_behrend{ap3::behrend_set(x)}; });
}

void ap3_behrend_free(ap3_behrend* b) { delete b; }

uint64_t ap3_behrend_size(const ap3_behrend* b) {
  return b == nullptr ? 0 : b->impl.elements.size();
}

ap3_status ap3_behrend_elements(const ap3_behrend* b, uint64_t* buffer, size_t buffer_len) {
  if (ap3_status s = require(b != nullptr, "ap3_behrend_elements: null handle")) return s;
  if (buffer_len < b->impl.elements.size()) {
    g_last_error = "ap3_behrend_elements: buffer too small";
    return AP3_ERR_RANGE;
  }
  std::memcpy(buffer, b->impl.elements.data(), b->impl.elements.size() * sizeof(uint64_t));
  return AP3_OK;
}

ap3_status ap3_behrend_to_json(const ap3_behrend* b, char** json_out) {
  if (ap3_status s =
          require(b != nullptr && json_out != nullptr, "ap3_behrend_to_json: null argument"))
    return s;
  return guarded([&] { *json_out = copy_string(ap3::to_json_text(b->impl)); });
}

ap3_status ap3_behrend_embed(const ap3_behrend* b, uint64_t q, ap3_set** t_out,
                             uint64_t* replication_out) {
  if (ap3_status s = require(b != nullptr && t_out != nullptr && replication_out != nullptr,
                             "ap3_behrend_embed: null argument"))
    return s;
  return guarded([&] {
    ap3::EmbeddedSet embedded = ap3::embed_mod_q(b->impl, q);
    *replication_out = embedded.replication;
    *t_out = new ap3_set{std::move(embedded.t)};
  });
}

ap3_status ap3_verify_ap_free(const uint64_t* elements, size_t count, int* ok) {
  if (ap3_status s = require(ok != nullptr && (elements != nullptr || count == 0),
                             "ap3_verify_ap_free: null argument"))
    return s;
  return guarded([&] {
    *ok = ap3::verify_ap_free(std::span<const uint64_t>(elements, count)) ? 1 : 0;
  });
}

ap3_status ap3_max_apfree_size(uint32_t n, uint32_t budget, uint32_t* out) {
  if (ap3_status s = require(out != nullptr, "ap3_max_apfree_size: null output")) return s;
  return guarded([&] {
    *out = ap3::max_apfree_size(n, budget == 0 ? ap3::kDefaultExactApFreeBudget : budget);
  });
}

ap3_status ap3_h_of_rho(double rho, uint32_t m_max, uint32_t budget, uint32_t* m_out, int* found) {
  if (ap3_status s =
          require(m_out != nullptr && found != nullptr, "ap3_h_of_rho: null output"))
    return s;
  return guarded([&] {
    const auto m =
        ap3::h_of_rho(rho, m_max, budget == 0 ? ap3::kDefaultExactApFreeBudget : budget);
    *found = m.has_value() ? 1 : 0;
    *m_out = m.value_or(0);
  });
}

ap3_status ap3_rho_sequence(double k, double c, uint32_t n_max, double* values, size_t capacity,
                            size_t* count_out, int* truncated) {
  if (ap3_status s = require(count_out != nullptr && truncated != nullptr &&
                                 (values != nullptr || capacity == 0),
                             "ap3_rho_sequence: null argument"))
    return s;
  return guarded([&] {
    const ap3::RhoSequence seq = ap3::rho_sequence(k, c, n_max);
    *count_out = seq.values.size();
    *truncated = seq.truncated ? 1 : 0;
    const size_t n = std::min(capacity, seq.values.size());
    for (size_t i = 0; i < n; ++i) values[i] = seq.values[i];
  });
}

/* ----------------------------- search ----------------------------- */

ap3_status ap3_exact_min(uint64_t q, uint64_t m, uint64_t budget, char** json_out) {
  if (ap3_status s = require(json_out != nullptr, "ap3_exact_min: null output")) return s;
  return guarded([&] { *json_out = copy_string(ap3::to_json_text(ap3::exact_min(q, m, budget))); });
}

void ap3_search_config_init(ap3_search_config* config) {
  if (config == nullptr) return;
  const ap3::LocalSearchConfig defaults;
  config->iterations = defaults.iterations;
  config->restarts = defaults.restarts;
  config->t0 = defaults.t0;
  config->cooling = defaults.cooling;
  config->anneal = defaults.anneal ? 1 : 0;
  config->recheck_interval = defaults.recheck_interval;
  config->threads = defaults.threads;
}

ap3_status ap3_local_search(uint64_t q, uint64_t m, uint64_t seed,
                            const ap3_search_config* config, char** json_out) {
  if (ap3_status s = require(json_out != nullptr, "ap3_local_search: null output")) return s;
  return guarded([&] {
    *json_out = copy_string(ap3::to_json_text(ap3::local_search(q, m, seed, convert(config))));
  });
}

ap3_status ap3_varnavides_audit(const ap3_set* set, double rho, uint32_t k, uint64_t budget,
                                char** json_out) {
  if (ap3_status s = require(set != nullptr && json_out != nullptr,
                             "ap3_varnavides_audit: null argument"))
    return s;
  return guarded([&] {
    *json_out = copy_string(ap3::to_json_text(
        ap3::varnavides_audit(set->impl, rho, k, budget == 0 ? 2000000000ull : budget)));
  });
}

ap3_status ap3_rqn_ratio(double rho, uint64_t n_low, uint64_t n_high, uint64_t budget,
                         char** json_out) {
  if (ap3_status s = require(json_out != nullptr, "ap3_rqn_ratio: null output")) return s;
  return guarded([&] {
    *json_out = copy_string(ap3::to_json_text(ap3::rqn_ratio(rho, n_low, n_high, budget)));
  });
}

/* ----------------------------- transfer --------------------------- */

ap3_status ap3_find_companion_prime(uint64_t q, double eta, uint64_t* p, int* in_strict_interval) {
  if (ap3_status s = require(p != nullptr && in_strict_interval != nullptr,
                             "ap3_find_companion_prime: null output"))
    return s;
  return guarded([&] {
    const ap3::CompanionPrime companion = ap3::find_companion_prime(q, eta);
    *p = companion.p;
    *in_strict_interval = companion.in_strict_interval ? 1 : 0;
  });
}

ap3_status ap3_mu_transfer_report(const ap3_set* w, uint64_t p, double epsilon, double rho,
                                  uint64_t v, uint64_t k, char** json_out) {
  if (ap3_status s = require(w != nullptr && json_out != nullptr,
                             "ap3_mu_transfer_report: null argument"))
    return s;
  return guarded([&] {
    *json_out = copy_string(ap3::to_json_text(
        ap3::mu_transfer_report(w->impl, p, ap3::TransferParams{epsilon, rho, v, k})));
  });
}

ap3_status ap3_pq_switch_check(const ap3_set* w, int64_t b, uint64_t p, uint64_t big_q,
                               double* error, double* budget, double* ratio) {
  if (ap3_status s = require(w != nullptr && error != nullptr && budget != nullptr &&
                                 ratio != nullptr,
                             "ap3_pq_switch_check: null argument"))
    return s;
  return guarded([&] {
    const ap3::PqSwitchCheck check = ap3::pq_switch_check(w->impl, b, p, big_q);
    *error = check.error;
    *budget = check.budget;
    *ratio = check.ratio;
  });
}

ap3_status ap3_residue_occupancy(const ap3_set* w, uint64_t p, uint64_t* occupied,
                                 uint64_t* singles, uint64_t* doubles) {
  if (ap3_status s = require(w != nullptr && occupied != nullptr && singles != nullptr &&
                                 doubles != nullptr,
                             "ap3_residue_occupancy: null argument"))
    return s;
  return guarded([&] {
    const ap3::OccupancyReport report = ap3::residue_occupancy(w->impl, p);
    *occupied = report.occupied;
    *singles = report.singles;
    *doubles = report.doubles;
  });
}

ap3_status ap3_split_intersection(const ap3_set* w, uint64_t p, uint64_t* out) {
  if (ap3_status s =
          require(w != nullptr && out != nullptr, "ap3_split_intersection: null argument"))
    return s;
  return guarded([&] { *out = ap3::split_intersection(w->impl, p); });
}

ap3_status ap3_invariance_profile(const ap3_set* set, uint64_t b, double d, uint64_t max_len,
                                  uint64_t* values, size_t capacity, size_t* count_out,
                                  double* score) {
  if (ap3_status s = require(set != nullptr && count_out != nullptr && score != nullptr &&
                                 (values != nullptr || capacity == 0),
                             "ap3_invariance_profile: null argument"))
    return s;
  return guarded([&] {
    const ap3::InvarianceProfile profile =
        ap3::invariance_profile(set->impl, b, d, max_len == 0 ? 1000000 : max_len);
    *count_out = profile.values.size();
    *score = profile.score;
    const size_t n = std::min(capacity, profile.values.size());
    for (size_t i = 0; i < n; ++i) values[i] = profile.values[i];
  });
}

void ap3_experiment_config_init(ap3_experiment_config* config) {
  if (config == nullptr) return;
  const ap3::ExperimentConfig defaults;
  config->exact_budget = defaults.exact_budget;
  config->profile_cap = defaults.profile_max_len;
  ap3_search_config_init(&config->search);
}

ap3_status ap3_main_theorem_experiment(uint64_t q, double rho, double epsilon, double d,
                                       uint64_t seed, const ap3_experiment_config* config,
                                       char** json_out) {
  if (ap3_status s = require(json_out != nullptr, "ap3_main_theorem_experiment: null output"))
    return s;
  return guarded([&] {
    ap3::ExperimentConfig cfg;
    if (config != nullptr) {
      if (config->exact_budget != 0) cfg.exact_budget = config->exact_budget;
      if (config->profile_cap != 0) cfg.profile_max_len = config->profile_cap;
      cfg.local = convert(&config->search);
    }
    *json_out = copy_string(
        ap3::to_json_text(ap3::main_theorem_experiment(q, rho, epsilon, d, seed, cfg)));
  });
}

}  // extern "C"
