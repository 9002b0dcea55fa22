#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "ap3/ap3.h"

using nlohmann::json;

namespace {

struct SetHandle {
  ap3_set* ptr = nullptr;
  ~SetHandle() { ap3_set_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { ap3_string_free(ptr); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(ap3_version()) == "1.0.0");
  CHECK(std::string(ap3_status_name(AP3_OK)) == "ok");
  CHECK(std::string(ap3_status_name(AP3_ERR_BUDGET)) == "budget exceeded");
}

TEST_CASE("set lifecycle and error reporting") {
  SetHandle s;
  const uint64_t elems[] = {1, 2, 3};
  REQUIRE(ap3_set_create(7, elems, 3, &s.ptr) == AP3_OK);
  CHECK(ap3_set_modulus(s.ptr) == 7);
  CHECK(ap3_set_size(s.ptr) == 3);
  CHECK(ap3_set_contains(s.ptr, 2) == 1);
  CHECK(ap3_set_contains(s.ptr, 4) == 0);

  uint64_t buffer[3];
  REQUIRE(ap3_set_elements(s.ptr, buffer, 3) == AP3_OK);
  CHECK(buffer[0] == 1);
  CHECK(buffer[2] == 3);
  CHECK(ap3_set_elements(s.ptr, buffer, 2) == AP3_ERR_RANGE);

  ap3_set* bad = nullptr;
  CHECK(ap3_set_create(8, elems, 3, &bad) == AP3_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ap3_last_error()).find("prime") != std::string::npos);
  const uint64_t oob[] = {9};
  CHECK(ap3_set_create(7, oob, 1, &bad) == AP3_ERR_INVALID_ARGUMENT);

  StringHandle text;
  REQUIRE(ap3_set_to_json(s.ptr, &text.ptr) == AP3_OK);
  SetHandle parsed;
  REQUIRE(ap3_set_from_json(text.ptr, &parsed.ptr) == AP3_OK);
  CHECK(ap3_set_size(parsed.ptr) == 3);
  CHECK(ap3_set_from_json("{\"q\":7,\"elements\":[3,2]}", &bad) == AP3_ERR_IO);
}

TEST_CASE("counting through the C surface") {
  SetHandle s;
  const uint64_t elems[] = {1, 2, 3};
  REQUIRE(ap3_set_create(7, elems, 3, &s.ptr) == AP3_OK);
  ap3_count_report naive{}, conv{};
  REQUIRE(ap3_count_naive(s.ptr, &naive) == AP3_OK);
  REQUIRE(ap3_count_convolution(s.ptr, &conv) == AP3_OK);
  CHECK(naive.total == 5);
  CHECK(naive.trivial == 3);
  CHECK(naive.nontrivial == 2);
  CHECK(conv.total == naive.total);

  int64_t delta = 0;
  REQUIRE(ap3_delta_count(s.ptr, 3, 5, &delta) == AP3_OK);
  CHECK(ap3_delta_count(s.ptr, 5, 3, &delta) == AP3_ERR_INVALID_ARGUMENT);
}

TEST_CASE("fourier through the C surface") {
  SetHandle s;
  REQUIRE(ap3_set_random(101, 40, 9, &s.ptr) == AP3_OK);
  ap3_spectrum* spec = nullptr;
  REQUIRE(ap3_dft(s.ptr, &spec) == AP3_OK);
  CHECK(ap3_spectrum_modulus(spec) == 101);
  CHECK(ap3_spectrum_parseval_residual(spec) < 1e-9);
  double re = 0, im = 0;
  REQUIRE(ap3_spectrum_coeff(spec, 0, &re, &im) == AP3_OK);
  CHECK(re == doctest::Approx(40.0));
  StringHandle csv;
  REQUIRE(ap3_spectrum_to_csv(spec, &csv.ptr) == AP3_OK);
  CHECK(std::string(csv.ptr).substr(0, 12) == "a,re,im,abs\n");
  ap3_spectrum_free(spec);

  double value = 0, residual = 0, imag_abs = 0;
  REQUIRE(ap3_fourier_count_identity(s.ptr, &value, &residual, &imag_abs) == AP3_OK);
  CHECK(residual < 1e-6 * 101 * 101);

  int64_t freqs[128];
  size_t count = 0;
  REQUIRE(ap3_large_spectrum(s.ptr, 0.5, freqs, 128, &count) == AP3_OK);
  CHECK(count >= 1);
}

TEST_CASE("search and reports return JSON") {
  StringHandle result;
  REQUIRE(ap3_exact_min(7, 3, 1000, &result.ptr) == AP3_OK);
  const json doc = json::parse(result.ptr);
  CHECK(doc["report"]["nontrivial"] == 0);
  CHECK(doc["witness"] == json::array({0, 1, 3}));
  CHECK(doc["optimality"] == "proven");

  StringHandle budget;
  CHECK(ap3_exact_min(101, 50, 10, &budget.ptr) == AP3_ERR_BUDGET);

  ap3_search_config config;
  ap3_search_config_init(&config);
  config.iterations = 2000;
  config.restarts = 2;
  StringHandle ls1, ls2;
  REQUIRE(ap3_local_search(7, 3, 5, &config, &ls1.ptr) == AP3_OK);
  REQUIRE(ap3_local_search(7, 3, 5, &config, &ls2.ptr) == AP3_OK);
  CHECK(std::string(ls1.ptr) == std::string(ls2.ptr));
}

TEST_CASE("experiment pipeline via C API is byte-deterministic") {
  ap3_experiment_config config;
  ap3_experiment_config_init(&config);
  config.search.iterations = 2000;
  config.search.restarts = 2;
  StringHandle a, b;
  REQUIRE(ap3_main_theorem_experiment(101, 0.3, 0.25, 0.2, 42, &config, &a.ptr) == AP3_OK);
  REQUIRE(ap3_main_theorem_experiment(101, 0.3, 0.25, 0.2, 42, &config, &b.ptr) == AP3_OK);
  CHECK(std::strcmp(a.ptr, b.ptr) == 0);
  const json doc = json::parse(a.ptr);
  CHECK(doc["all_checks_ok"] == true);
  CHECK(doc["companion"]["p"] == 53);
}

TEST_CASE("behrend and transfer helpers") {
  ap3_behrend* b = nullptr;
  REQUIRE(ap3_behrend_construct(5, &b) == AP3_OK);
  CHECK(ap3_behrend_size(b) == 4);
  SetHandle t;
  uint64_t replication = 0;
  REQUIRE(ap3_behrend_embed(b, 41, &t.ptr, &replication) == AP3_OK);
  CHECK(replication == 1);
  CHECK(ap3_set_size(t.ptr) == 8);
  ap3_behrend_free(b);

  int ok = 0;
  const uint64_t ap[] = {1, 2, 3};
  REQUIRE(ap3_verify_ap_free(ap, 3, &ok) == AP3_OK);
  CHECK(ok == 0);

  uint32_t nu = 0;
  REQUIRE(ap3_max_apfree_size(9, 0, &nu) == AP3_OK);
  CHECK(nu == 5);

  uint64_t p = 0;
  int strict = 0;
  REQUIRE(ap3_find_companion_prime(101, 0.5, &p, &strict) == AP3_OK);
  CHECK(p == 53);

  SetHandle w;
  REQUIRE(ap3_set_random(101, 60, 4, &w.ptr) == AP3_OK);
  uint64_t occupied = 0, singles = 0, doubles = 0, split = 0;
  REQUIRE(ap3_residue_occupancy(w.ptr, 53, &occupied, &singles, &doubles) == AP3_OK);
  REQUIRE(ap3_split_intersection(w.ptr, 53, &split) == AP3_OK);
  CHECK(singles + 2 * doubles == 60);
  CHECK(split == doubles);

  uint64_t values[16];
  size_t count = 0;
  double score = 0;
  REQUIRE(ap3_invariance_profile(w.ptr, 5, 0.3, 0, values, 16, &count, &score) == AP3_OK);
  CHECK(count == 4);  // ceil(101^0.3)
  CHECK(values[0] == 60);
}
