/* ap3 — exact counting, Fourier analysis, construction and minimization
 * of 3-term arithmetic progressions in Z/qZ, for odd prime q.
 *
 * C API over the C++ core. Conventions:
 *   - every fallible call returns an ap3_status; out-parameters are only
 *     written on AP3_OK;
 *   - ap3_last_error() describes the most recent failure on the calling
 *     thread;
 *   - objects returned through ap3_*_create/ap3_* constructors are owned
 *     by the caller and released with the matching _free;
 *   - strings returned through char** are malloc'd UTF-8 JSON documents,
 *     released with ap3_string_free.
 */
#ifndef AP3_H
#define AP3_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ap3_status {
  AP3_OK = 0,
  AP3_ERR_INVALID_ARGUMENT = 1,
  AP3_ERR_RANGE = 2,
  AP3_ERR_BUDGET = 3,
  AP3_ERR_IO = 4,
  AP3_ERR_PRECONDITION = 5,
  AP3_ERR_INTERNAL = 6,
} ap3_status;

const char* ap3_version(void);
const char* ap3_status_name(ap3_status status);
/* Thread-local message for the last failing call on this thread. */
const char* ap3_last_error(void);
void ap3_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Residue sets                                                        */

typedef struct ap3_set ap3_set;

/* Subset of Z/qZ; q must be an odd prime. Elements in any order, no
 * duplicates. */
ap3_status ap3_set_create(uint64_t q, const uint64_t* elements, size_t count, ap3_set** out);
ap3_status ap3_set_full(uint64_t q, ap3_set** out);
/* Uniform m-subset, deterministic per (q, m, seed). */
ap3_status ap3_set_random(uint64_t q, uint64_t m, uint64_t seed, ap3_set** out);
/* Parses {"q": ..., "elements": [...]} (strictly ascending). */
ap3_status ap3_set_from_json(const char* text, ap3_set** out);
ap3_status ap3_set_to_json(const ap3_set* set, char** json_out);
void ap3_set_free(ap3_set* set);

uint64_t ap3_set_modulus(const ap3_set* set);
uint64_t ap3_set_size(const ap3_set* set);
int ap3_set_contains(const ap3_set* set, uint64_t element);
/* Copies the sorted elements; buffer_len must be >= ap3_set_size(). */
ap3_status ap3_set_elements(const ap3_set* set, uint64_t* buffer, size_t buffer_len);

/* ------------------------------------------------------------------ */
/* Modular utilities                                                   */

int ap3_is_prime(uint64_t n);
ap3_status ap3_mod_inverse(uint64_t a, uint64_t q, uint64_t* out);
/* Image {scale * s + offset mod q : s in S}; scale must be nonzero. */
ap3_status ap3_affine_apply(const ap3_set* set, uint64_t scale, uint64_t offset, ap3_set** out);
/* |S intersect (S + b)|. */
ap3_status ap3_shift_intersection(const ap3_set* set, uint64_t b, uint64_t* out);
/* Smallest prime in [x, x + floor(x^theta)]; *found 0 when none. */
ap3_status ap3_find_prime_in_interval(uint64_t x, double theta, uint64_t* prime_out, int* found);

/* ------------------------------------------------------------------ */
/* Triple counting: a + b = 2c (mod q), ordered, trivial = |S|          */

typedef struct ap3_count_report {
  uint64_t q;
  uint64_t size;
  uint64_t total;
  uint64_t trivial;
  uint64_t nontrivial;
  double mu; /* total / q^2; exact value is total over q squared */
} ap3_count_report;

ap3_status ap3_count_naive(const ap3_set* set, ap3_count_report* report);
ap3_status ap3_count_convolution(const ap3_set* set, ap3_count_report* report);
/* Exact change of `total` when swapping out_elem (in S) for in_elem. */
ap3_status ap3_delta_count(const ap3_set* set, uint64_t out_elem, uint64_t in_elem,
                           int64_t* delta);

/* ------------------------------------------------------------------ */
/* Exponential sums f_S(a/q) = sum e(s a / q)                          */

typedef struct ap3_spectrum ap3_spectrum;

ap3_status ap3_dft(const ap3_set* set, ap3_spectrum** out);
void ap3_spectrum_free(ap3_spectrum* spectrum);
uint64_t ap3_spectrum_modulus(const ap3_spectrum* spectrum);
/* Coefficient at frequency a (any integer; reduced mod q). */
ap3_status ap3_spectrum_coeff(const ap3_spectrum* spectrum, int64_t a, double* re, double* im);
double ap3_spectrum_parseval_residual(const ap3_spectrum* spectrum);
/* CSV table "a,re,im,abs" over a in (-q/2, q/2). */
ap3_status ap3_spectrum_to_csv(const ap3_spectrum* spectrum, char** csv_out);

ap3_status ap3_eval_at_real(const ap3_set* set, double u, double* re, double* im);

/* Frequencies with |f_S(a/q)| > epsilon |S|, ascending; writes up to
 * capacity entries and the true count. */
ap3_status ap3_large_spectrum(const ap3_set* set, double epsilon, int64_t* frequencies,
                              size_t capacity, size_t* count_out);

/* (1/q) sum f(a/q)^2 f(-2a/q) against the exact integer count. */
ap3_status ap3_fourier_count_identity(const ap3_set* set, double* value, double* residual,
                                      double* imag_abs);

/* |sum_{j=N+1}^{N+H} e(jt)| vs min(H, 1/(2|t|)). */
ap3_status ap3_dirichlet_bound_check(uint64_t n0, uint64_t h, double t, double* lhs, double* bound,
                                     int* ok);

/* Windowed sum over W vs 2|W| (eps H / (rho q))^(1/3); verdict reported,
 * not asserted. */
ap3_status ap3_short_sum_check(const ap3_set* set, int64_t a, uint64_t n0, uint64_t h,
                               double epsilon, double rho, double* lhs, double* bound, int* ok);

/* ------------------------------------------------------------------ */
/* Rectification                                                       */

/* Smallest j pulling every large frequency of S near 0; h = j^-1.
 * *found is 0 when the exhaustive scan rejects every j. */
ap3_status ap3_find_rectifying_dilation(const ap3_set* set, double epsilon, uint64_t* j,
                                        uint64_t* h, int* found, int* pigeonhole_ok, int* vacuous);
/* W = (4v)^-1 S' + k (mod q). */
ap3_status ap3_build_w(const ap3_set* s_prime, uint64_t k, uint64_t v, ap3_set** out);
/* JSON certificate for |a| <= 4 v q^(1 - rho eps^2) and 4v | a over the
 * nonzero large frequencies of W; includes the violator list. */
ap3_status ap3_spectral_certificate(const ap3_set* w, double epsilon, double rho, uint64_t v,
                                    int* verified, int* vacuous, char** json_out);

/* ------------------------------------------------------------------ */
/* Progression-free constructions in {1..x}                            */

typedef struct ap3_behrend ap3_behrend;

/* Sphere-construction scan (exact search below 41). */
ap3_status ap3_behrend_construct(uint64_t x, ap3_behrend** out);
void ap3_behrend_free(ap3_behrend* b);
uint64_t ap3_behrend_size(const ap3_behrend* b);
ap3_status ap3_behrend_elements(const ap3_behrend* b, uint64_t* buffer, size_t buffer_len);
ap3_status ap3_behrend_to_json(const ap3_behrend* b, char** json_out);
/* T = {s + 2kx : s in B, 0 <= k <= K} subset {0..(q-1)/2}; requires
 * q > 4x. K is returned through replication_out. */
ap3_status ap3_behrend_embed(const ap3_behrend* b, uint64_t q, ap3_set** t_out,
                             uint64_t* replication_out);

ap3_status ap3_verify_ap_free(const uint64_t* elements, size_t count, int* ok);
/* Exact extremal value over {1..n}; budget caps the exponential search. */
ap3_status ap3_max_apfree_size(uint32_t n, uint32_t budget, uint32_t* out);
/* Least M <= m_max with max_apfree_size(m) < rho m on [M, m_max];
 * *found 0 when none. */
ap3_status ap3_h_of_rho(double rho, uint32_t m_max, uint32_t budget, uint32_t* m_out, int* found);
/* Density recurrence x1 = exp(-2 C^2 ln k); writes up to capacity terms. */
ap3_status ap3_rho_sequence(double k, double c, uint32_t n_max, double* values, size_t capacity,
                            size_t* count_out, int* truncated);

/* ------------------------------------------------------------------ */
/* Minimization of the nontrivial triple count at fixed cardinality    */

/* Exhaustive minimum over all m-subsets; JSON SearchResult with the
 * lexicographically least witness. Budget bounds C(q, m). */
ap3_status ap3_exact_min(uint64_t q, uint64_t m, uint64_t budget, char** json_out);

typedef struct ap3_search_config {
  uint64_t iterations;        /* moves per restart; 0 picks the default   */
  uint32_t restarts;          /* 0 picks the default                      */
  double t0;                  /* initial temperature; < 0 picks m         */
  double cooling;             /* geometric factor; <= 0 picks the default */
  int anneal;                 /* 0: plateau descent, 1: annealing         */
  uint32_t recheck_interval;  /* full-recount cadence; 0 disables         */
  uint32_t threads;           /* 0 = auto                                 */
} ap3_search_config;

/* Sensible defaults (annealing, 20000 moves, 8 restarts). */
void ap3_search_config_init(ap3_search_config* config);

/* Swap-neighborhood search, deterministic per seed. */
ap3_status ap3_local_search(uint64_t q, uint64_t m, uint64_t seed,
                            const ap3_search_config* config, char** json_out);

/* Double-counting audit over all q(q-1) ordered k-term progressions. */
ap3_status ap3_varnavides_audit(const ap3_set* set, double rho, uint32_t k, uint64_t budget,
                                char** json_out);

/* Exact minima table over the primes of [n_low, n_high] at density rho. */
ap3_status ap3_rqn_ratio(double rho, uint64_t n_low, uint64_t n_high, uint64_t budget,
                         char** json_out);

/* ------------------------------------------------------------------ */
/* Companion-prime transfer and the invariance experiment              */

/* Smallest prime at or above ceil(q/2), scanning a window of width
 * max(q^eta, 2 ln^2 q) and widening as needed. */
ap3_status ap3_find_companion_prime(uint64_t q, double eta, uint64_t* p, int* in_strict_interval);

/* mu_q vs (p^3/q^3) mu_p with exact residual bookkeeping (JSON). */
ap3_status ap3_mu_transfer_report(const ap3_set* w, uint64_t p, double epsilon, double rho,
                                  uint64_t v, uint64_t k, char** json_out);

/* |f_W(2b/q) - f_W(b/p)| vs delta Q |W| / q. */
ap3_status ap3_pq_switch_check(const ap3_set* w, int64_t b, uint64_t p, uint64_t big_q,
                               double* error, double* budget, double* ratio);

/* Residue classes mod p hit by W, split by multiplicity (at most 2). */
ap3_status ap3_residue_occupancy(const ap3_set* w, uint64_t p, uint64_t* occupied,
                                 uint64_t* singles, uint64_t* doubles);
/* |W0 intersect (W1 - p)|; always equals the occupancy doubles. */
ap3_status ap3_split_intersection(const ap3_set* w, uint64_t p, uint64_t* out);

/* values[j] = |S intersect (S + b j)| for 0 <= j < ceil(q^d); writes up
 * to capacity values. score = min / |S|. */
ap3_status ap3_invariance_profile(const ap3_set* set, uint64_t b, double d, uint64_t max_len,
                                  uint64_t* values, size_t capacity, size_t* count_out,
                                  double* score);

typedef struct ap3_experiment_config {
  uint64_t exact_budget;   /* exhaustive-search cap on C(q, m); 0 = default */
  uint64_t profile_cap;    /* profile length cap; 0 = default               */
  ap3_search_config search;
} ap3_experiment_config;

void ap3_experiment_config_init(ap3_experiment_config* config);

/* Full pipeline: minimize at density rho, rectify, companion prime,
 * v-sweep with exact cross-checks, invariance profile. Deterministic
 * per seed; JSON report. */
ap3_status ap3_main_theorem_experiment(uint64_t q, double rho, double epsilon, double d,
                                       uint64_t seed, const ap3_experiment_config* config,
                                       char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* AP3_H */
