// ap3 command-line front end. Links only the shared C API; reports are
// composed from the JSON the library emits. Every run writes a manifest
// (argv, resolved config, seeds, digests) sufficient to replay the run
// bit-identically via `ap3 replay`.

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ap3/ap3.h"
#include "sha256.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBudget = 2;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

[[noreturn]] void die_api(ap3_status status, const std::string& where) {
  const int code = status == AP3_ERR_BUDGET ? kExitBudget : kExitValidation;
  die(code, where + ": " + ap3_last_error());
}

void check(ap3_status status, const std::string& where) {
  if (status != AP3_OK) die_api(status, where);
}

// Owned string from the C API.
struct ApiString {
  char* ptr = nullptr;
  ~ApiString() { ap3_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

struct ApiSet {
  ap3_set* ptr = nullptr;
  ApiSet() = default;
  explicit ApiSet(ap3_set* p) : ptr(p) {}
  ApiSet(const ApiSet&) = delete;
  ApiSet& operator=(const ApiSet&) = delete;
  ApiSet(ApiSet&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  ~ApiSet() { ap3_set_free(ptr); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitValidation, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Collects output files and their digests for the manifest.
class RunWriter {
 public:
  explicit RunWriter(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) die(kExitValidation, "cannot create output directory: " + dir_.string());
  }

  void write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitValidation, "cannot write: " + path.string());
    out << content;
    out.close();
    outputs_[name] = ap3cli::sha256_hex(content);
  }

  void note_input(const std::string& path, const std::string& content) {
    inputs_[path] = ap3cli::sha256_hex(content);
  }

  const fs::path& dir() const { return dir_; }
  const std::map<std::string, std::string>& outputs() const { return outputs_; }
  const std::map<std::string, std::string>& inputs() const { return inputs_; }

 private:
  fs::path dir_;
  std::map<std::string, std::string> outputs_;
  std::map<std::string, std::string> inputs_;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string default_out_dir(uint64_t seed) {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", &tm);
  return "runs/" + std::string(buf) + "-seed" + std::to_string(seed);
}

uint32_t env_threads() {
  const char* env = std::getenv("AP3_THREADS");
  if (env == nullptr) return 0;
  return static_cast<uint32_t>(std::strtoul(env, nullptr, 10));
}

ApiSet load_set(const std::string& path, RunWriter& writer) {
  const std::string content = read_file(path);
  writer.note_input(path, content);
  ap3_set* set = nullptr;
  check(ap3_set_from_json(content.c_str(), &set), path);
  return ApiSet(set);
}

json count_report_json(const ap3_count_report& r) {
  return json{{"q", r.q},           {"size", r.size},
              {"total", r.total},   {"trivial", r.trivial},
              {"nontrivial", r.nontrivial}, {"mu_num", r.total},
              {"mu_den", r.q * r.q}};
}

std::string profile_csv_from(const json& values) {
  std::string out = "j,intersection\n";
  for (size_t j = 0; j < values.size(); ++j) {
    out += std::to_string(j);
    out += ',';
    out += values[j].dump();
    out += '\n';
  }
  return out;
}

std::string ratio_csv_from(const json& rows) {
  std::string out = "q,m,min_nontrivial,witness\n";
  for (const auto& row : rows) {
    out += row["q"].dump();
    out += ',';
    out += row["m"].dump();
    out += ',';
    out += row["min_nontrivial"].dump();
    out += ',';
    const auto& witness = row["witness"];
    for (size_t i = 0; i < witness.size(); ++i) {
      if (i > 0) out += ' ';
      out += witness[i].dump();
    }
    out += '\n';
  }
  return out;
}

std::string minima_csv_from(const json& result) {
  std::string out = "q,m,min_nontrivial,witness\n";
  out += result["report"]["q"].dump();
  out += ',';
  out += result["report"]["size"].dump();
  out += ',';
  out += result["report"]["nontrivial"].dump();
  out += ',';
  const auto& witness = result["witness"];
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) out += ' ';
    out += witness[i].dump();
  }
  out += '\n';
  return out;
}

// Resolved per-command configuration; serialized into the manifest and
// consumed directly by `replay`.
struct RunOutcome {
  std::string primary_json;  // printed for --format json
  std::string primary_csv;   // printed for --format csv when present
};

RunOutcome run_count(const json& config, RunWriter& writer) {
  ApiSet set = load_set(config["set"], writer);
  if (config.contains("q") && config["q"].get<uint64_t>() != ap3_set_modulus(set.ptr)) {
    die(kExitValidation, "count: --q disagrees with the set file modulus");
  }
  ap3_count_report conv{}, naive{};
  check(ap3_count_convolution(set.ptr, &conv), "count");
  check(ap3_count_naive(set.ptr, &naive), "count");
  if (conv.total != naive.total) die(kExitValidation, "count: counter disagreement");
  const std::string text = count_report_json(conv).dump(2) + "\n";
  writer.write("report.json", text);
  return {text, ""};
}

RunOutcome run_spectrum(const json& config, RunWriter& writer) {
  ApiSet set = load_set(config["set"], writer);
  ap3_spectrum* spec = nullptr;
  check(ap3_dft(set.ptr, &spec), "spectrum");
  ApiString csv;
  check(ap3_spectrum_to_csv(spec, &csv.ptr), "spectrum");
  json summary{{"q", ap3_spectrum_modulus(spec)},
               {"size", ap3_set_size(set.ptr)},
               {"parseval_residual", ap3_spectrum_parseval_residual(spec)}};
  ap3_spectrum_free(spec);
  if (config.contains("epsilon")) {
    const double epsilon = config["epsilon"];
    std::vector<int64_t> freqs(ap3_set_modulus(set.ptr));
    size_t count = 0;
    check(ap3_large_spectrum(set.ptr, epsilon, freqs.data(), freqs.size(), &count), "spectrum");
    freqs.resize(count);
    summary["epsilon"] = epsilon;
    summary["large_frequencies"] = freqs;
  }
  double value = 0, residual = 0, imag_abs = 0;
  check(ap3_fourier_count_identity(set.ptr, &value, &residual, &imag_abs), "spectrum");
  summary["count_identity"] = json{{"value", value}, {"residual", residual}, {"imag_abs", imag_abs}};
  const std::string text = summary.dump(2) + "\n";
  writer.write("spectrum.json", text);
  writer.write("spectrum.csv", csv.str());
  return {text, csv.str()};
}

RunOutcome run_rectify(const json& config, RunWriter& writer) {
  ApiSet set = load_set(config["set"], writer);
  const double epsilon = config["epsilon"];
  const uint64_t v = config["v"];
  const uint64_t k = config["k"];
  uint64_t j = 0, h = 0;
  int found = 0, pigeonhole = 0, vacuous = 0;
  check(ap3_find_rectifying_dilation(set.ptr, epsilon, &j, &h, &found, &pigeonhole, &vacuous),
        "rectify");
  json doc{{"found", found != 0},
           {"j", j},
           {"h", h},
           {"pigeonhole_ok", pigeonhole != 0},
           {"vacuous", vacuous != 0}};
  std::string w_text;
  if (found != 0) {
    ap3_set* s_prime = nullptr;
    check(ap3_affine_apply(set.ptr, h, 0, &s_prime), "rectify");
    ApiSet s_prime_owned(s_prime);
    ap3_set* w = nullptr;
    check(ap3_build_w(s_prime, k, v, &w), "rectify");
    ApiSet w_owned(w);
    const double rho =
        static_cast<double>(ap3_set_size(set.ptr)) / static_cast<double>(ap3_set_modulus(set.ptr));
    int verified = 0, cert_vacuous = 0;
    ApiString cert;
    check(ap3_spectral_certificate(w, epsilon, rho, v, &verified, &cert_vacuous, &cert.ptr),
          "rectify");
    json cert_doc = json::parse(cert.str());
    cert_doc["h"] = h;
    cert_doc["j"] = j;
    cert_doc["k"] = k;
    doc["certificate"] = cert_doc;
    ApiString w_json;
    check(ap3_set_to_json(w, &w_json.ptr), "rectify");
    w_text = w_json.str() + "\n";
  }
  const std::string text = doc.dump(2) + "\n";
  writer.write("rectify.json", text);
  if (!w_text.empty()) writer.write("w_set.json", w_text);
  return {text, ""};
}

RunOutcome run_behrend(const json& config, RunWriter& writer) {
  const uint64_t x = config["x"];
  ap3_behrend* b = nullptr;
  check(ap3_behrend_construct(x, &b), "behrend");
  ApiString b_json;
  check(ap3_behrend_to_json(b, &b_json.ptr), "behrend");
  writer.write("behrend.json", b_json.str() + "\n");
  std::string primary = b_json.str() + "\n";
  if (config.contains("q")) {
    const uint64_t q = config["q"];
    ap3_set* t = nullptr;
    uint64_t replication = 0;
    const ap3_status status = ap3_behrend_embed(b, q, &t, &replication);
    if (status != AP3_OK) {
      ap3_behrend_free(b);
      die_api(status, "behrend embed");
    }
    ApiSet t_owned(t);
    ap3_count_report report{};
    check(ap3_count_convolution(t, &report), "behrend embed");
    ApiString t_json;
    check(ap3_set_to_json(t, &t_json.ptr), "behrend embed");
    writer.write("embedded_set.json", t_json.str() + "\n");
    const uint64_t source_size = ap3_behrend_size(b);
    json embed{{"q", q},
               {"replication", replication},
               {"source_size", source_size},
               {"size", report.size},
               {"report", count_report_json(report)},
               {"bound", source_size * replication * replication},
               {"bound_ok", replication == 0 ||
                                report.nontrivial < source_size * replication * replication}};
    const std::string text = embed.dump(2) + "\n";
    writer.write("embed_report.json", text);
    primary = text;
  }
  ap3_behrend_free(b);
  return {primary, ""};
}

RunOutcome run_search(const json& config, RunWriter& writer) {
  const uint64_t q = config["q"];
  const uint64_t m = config["m"];
  const std::string method = config["method"];
  ApiString result;
  if (method == "exhaustive") {
    check(ap3_exact_min(q, m, config["budget"], &result.ptr), "search");
  } else {
    ap3_search_config sc;
    ap3_search_config_init(&sc);
    sc.iterations = config["iterations"];
    sc.restarts = config["restarts"];
    sc.cooling = config["cooling"];
    sc.anneal = method == "anneal" ? 1 : 0;
    sc.threads = config["threads"];
    check(ap3_local_search(q, m, config["seed"], &sc, &result.ptr), "search");
  }
  json doc = json::parse(result.str());
  doc["config"] = config;
  const std::string text = doc.dump(2) + "\n";
  writer.write("result.json", text);
  const std::string csv = minima_csv_from(doc);
  writer.write("minima.csv", csv);
  return {text, csv};
}

RunOutcome run_audit(const json& config, RunWriter& writer) {
  ApiSet set = load_set(config["set"], writer);
  ApiString audit;
  check(ap3_varnavides_audit(set.ptr, config["rho"], config["k"], config["budget"], &audit.ptr),
        "audit");
  const std::string text = audit.str() + "\n";
  writer.write("audit.json", text);
  return {text, ""};
}

RunOutcome run_transfer(const json& config, RunWriter& writer) {
  ApiSet set = load_set(config["set"], writer);
  const uint64_t q = ap3_set_modulus(set.ptr);
  uint64_t p = 0;
  int strict = 0;
  if (config.contains("p")) {
    p = config["p"];
  } else {
    check(ap3_find_companion_prime(q, config["eta"], &p, &strict), "transfer");
  }
  ApiString report;
  check(ap3_mu_transfer_report(set.ptr, p, config["epsilon"], config["rho"], config["v"],
                               config["k"], &report.ptr),
        "transfer");
  uint64_t occupied = 0, singles = 0, doubles = 0, split = 0;
  check(ap3_residue_occupancy(set.ptr, p, &occupied, &singles, &doubles), "transfer");
  check(ap3_split_intersection(set.ptr, p, &split), "transfer");
  json doc{{"companion", json{{"p", p}, {"in_strict_interval", strict != 0}}},
           {"report", json::parse(report.str())},
           {"occupancy",
            json{{"occupied", occupied}, {"singles", singles}, {"doubles", doubles}}},
           {"split_intersection", split}};
  if (config.contains("b") && config.contains("Q")) {
    double error = 0, budget = 0, ratio = 0;
    check(ap3_pq_switch_check(set.ptr, config["b"], p, config["Q"], &error, &budget, &ratio),
          "transfer");
    doc["pq_switch"] = json{{"b", config["b"]}, {"Q", config["Q"]}, {"error", error},
                            {"budget", budget}, {"ratio", ratio}};
  }
  const std::string text = doc.dump(2) + "\n";
  writer.write("transfer.json", text);
  return {text, ""};
}

RunOutcome run_experiment(const json& config, RunWriter& writer) {
  ap3_experiment_config ec;
  ap3_experiment_config_init(&ec);
  ec.exact_budget = config["budget"];
  ec.search.iterations = config["iterations"];
  ec.search.restarts = config["restarts"];
  ec.search.threads = config["threads"];
  ApiString report;
  check(ap3_main_theorem_experiment(config["q"], config["rho"], config["epsilon"], config["d"],
                                    config["seed"], &ec, &report.ptr),
        "experiment");
  const json doc = json::parse(report.str());
  const std::string text = report.str() + "\n";
  writer.write("experiment.json", text);
  const std::string csv = profile_csv_from(doc["profile"]["values"]);
  writer.write("profile.csv", csv);
  return {text, csv};
}

RunOutcome run_ratio(const json& config, RunWriter& writer) {
  ApiString table;
  check(ap3_rqn_ratio(config["rho"], config["low"], config["high"], config["budget"], &table.ptr),
        "ratio");
  const json doc = json::parse(table.str());
  const std::string text = table.str() + "\n";
  writer.write("ratio.json", text);
  const std::string csv = ratio_csv_from(doc["rows"]);
  writer.write("ratio.csv", csv);
  return {text, csv};
}

RunOutcome run_command(const std::string& command, const json& config, RunWriter& writer) {
  if (command == "count") return run_count(config, writer);
  if (command == "spectrum") return run_spectrum(config, writer);
  if (command == "rectify") return run_rectify(config, writer);
  if (command == "behrend") return run_behrend(config, writer);
  if (command == "search") return run_search(config, writer);
  if (command == "audit") return run_audit(config, writer);
  if (command == "transfer") return run_transfer(config, writer);
  if (command == "experiment") return run_experiment(config, writer);
  if (command == "ratio") return run_ratio(config, writer);
  die(kExitValidation, "unknown command in manifest: " + command);
}

void write_manifest(RunWriter& writer, const std::string& command, const json& config,
                    const std::vector<std::string>& argv) {
  json manifest{{"tool", "ap3"},
                {"version", ap3_version()},
                {"command", command},
                {"argv", argv},
                {"config", config},
                {"seed", config.contains("seed") ? config["seed"] : json(0)},
                {"timestamp_utc", utc_timestamp()},
                {"inputs", writer.inputs()},
                {"outputs", writer.outputs()}};
  const fs::path path = writer.dir() / "manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) die(kExitValidation, "cannot write manifest: " + path.string());
  out << manifest.dump(2) << '\n';
}

int finish_run(const std::string& command, const json& config, const std::string& out_dir,
               const std::string& format, const std::vector<std::string>& argv) {
  RunWriter writer{fs::path(out_dir)};
  const RunOutcome outcome = run_command(command, config, writer);
  write_manifest(writer, command, config, argv);
  if (format == "csv" && !outcome.primary_csv.empty()) {
    std::cout << outcome.primary_csv;
  } else {
    std::cout << outcome.primary_json;
  }
  std::cerr << "outputs written to " << writer.dir().string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-term arithmetic progressions in Z/qZ: exact counting, exponential sums, "
               "progression-free constructions, minimization, and translation-invariance "
               "experiments"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string out_dir;
  std::string format = "json";
  uint64_t seed = 0;
  uint64_t budget = 5000000;
  uint32_t threads = env_threads();

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_dir, "output directory (default runs/<timestamp>-seed<seed>)");
    cmd->add_option("--format", format, "stdout format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", threads, "worker threads (0 = auto; env AP3_THREADS)");
  };

  // count
  std::string set_path;
  uint64_t q_flag = 0;
  CLI::App* count = app.add_subcommand("count", "exact triple counts of a set file");
  count->add_option("--set", set_path, "set file (JSON)")->required();
  CLI::Option* count_q = count->add_option("--q", q_flag, "expected modulus (cross-checked)");
  add_common(count);

  // spectrum
  double epsilon = 0.0;
  CLI::App* spectrum = app.add_subcommand("spectrum", "exponential-sum table and export");
  spectrum->add_option("--set", set_path, "set file (JSON)")->required();
  CLI::Option* spectrum_eps =
      spectrum->add_option("--epsilon", epsilon, "also list the large spectrum");
  add_common(spectrum);

  // rectify
  uint64_t v_flag = 1, k_flag = 0;
  CLI::App* rectify = app.add_subcommand("rectify", "dilation search and spectral certificate");
  rectify->add_option("--set", set_path, "set file (JSON)")->required();
  rectify->add_option("--epsilon", epsilon, "large-spectrum threshold")->required();
  rectify->add_option("--v", v_flag, "normalization parameter v (default 1)");
  rectify->add_option("--k", k_flag, "translation offset k (default 0)");
  add_common(rectify);

  // behrend
  uint64_t x_flag = 0;
  CLI::App* behrend = app.add_subcommand("behrend", "progression-free construction and embedding");
  behrend->add_option("--x", x_flag, "range bound of {1..x}")->required();
  CLI::Option* behrend_q = behrend->add_option("--q", q_flag, "embed into Z/qZ (requires q > 4x)");
  add_common(behrend);

  // search
  uint64_t m_flag = 0;
  double rho = 0.0;
  std::string method = "exhaustive";
  uint64_t iterations = 20000;
  uint32_t restarts = 8;
  double cooling = 0.995;
  CLI::App* search = app.add_subcommand("search", "minimize the nontrivial triple count");
  search->add_option("--q", q_flag, "modulus")->required();
  CLI::Option* search_m = search->add_option("--m", m_flag, "cardinality");
  CLI::Option* search_rho = search->add_option("--rho", rho, "density (m = ceil(rho q))");
  search->add_option("--method", method, "exhaustive|local|anneal")
      ->check(CLI::IsMember({"exhaustive", "local", "anneal"}));
  search->add_option("--seed", seed, "random seed");
  search->add_option("--budget", budget, "enumeration budget");
  search->add_option("--iterations", iterations, "moves per restart");
  search->add_option("--restarts", restarts, "independent restarts");
  search->add_option("--cooling", cooling, "annealing cooling factor");
  add_common(search);

  // audit
  uint32_t k_terms = 5;
  CLI::App* audit = app.add_subcommand("audit", "progression double-counting audit");
  audit->add_option("--set", set_path, "set file (JSON)")->required();
  audit->add_option("--rho", rho, "density parameter")->required();
  audit->add_option("--k", k_terms, "progression length")->required();
  audit->add_option("--budget", budget, "cost budget for q^2 k");
  add_common(audit);

  // transfer
  double eta = 0.5;
  uint64_t p_flag = 0;
  int64_t b_flag = 0;
  uint64_t big_q = 0;
  CLI::App* transfer = app.add_subcommand("transfer", "companion-prime comparison report");
  transfer->add_option("--set", set_path, "set file (JSON)")->required();
  transfer->add_option("--eta", eta, "companion window exponent");
  CLI::Option* transfer_p = transfer->add_option("--p", p_flag, "companion prime override");
  transfer->add_option("--epsilon", epsilon, "parameter echo");
  transfer->add_option("--rho", rho, "parameter echo");
  transfer->add_option("--v", v_flag, "parameter echo");
  transfer->add_option("--k", k_flag, "parameter echo");
  CLI::Option* transfer_b = transfer->add_option("--b", b_flag, "frequency for the p/q switch");
  CLI::Option* transfer_Q = transfer->add_option("--Q", big_q, "bound Q for the p/q switch");
  add_common(transfer);

  // experiment
  double d_flag = 0.2;
  CLI::App* experiment = app.add_subcommand("experiment", "full invariance pipeline");
  experiment->add_option("--q", q_flag, "modulus")->required();
  experiment->add_option("--rho", rho, "density")->required();
  experiment->add_option("--epsilon", epsilon, "large-spectrum threshold")->required();
  experiment->add_option("--d", d_flag, "profile exponent")->required();
  experiment->add_option("--seed", seed, "random seed");
  experiment->add_option("--budget", budget, "exhaustive-search cap");
  experiment->add_option("--iterations", iterations, "moves per restart");
  experiment->add_option("--restarts", restarts, "independent restarts");
  add_common(experiment);

  // ratio
  uint64_t low = 0, high = 0;
  CLI::App* ratio = app.add_subcommand("ratio", "exact minima across a prime window");
  ratio->add_option("--rho", rho, "density")->required();
  ratio->add_option("--low", low, "window start")->required();
  ratio->add_option("--high", high, "window end")->required();
  ratio->add_option("--budget", budget, "enumeration budget per prime");
  add_common(ratio);

  // replay
  std::string manifest_path;
  CLI::App* replay = app.add_subcommand("replay", "re-run a recorded manifest");
  replay->add_option("--manifest", manifest_path, "manifest.json from a previous run")->required();
  replay->add_option("--out", out_dir, "output directory for the replayed run");
  replay->add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  const std::vector<std::string> argv_copy(argv + 1, argv + argc);
  try {
    std::string command;
    json config;

    if (replay->parsed()) {
      const std::string manifest_text = read_file(manifest_path);
      json manifest;
      try {
        manifest = json::parse(manifest_text);
      } catch (const json::exception& e) {
        die(kExitValidation, std::string("replay: bad manifest: ") + e.what());
      }
      if (!manifest.contains("command") || !manifest.contains("config")) {
        die(kExitValidation, "replay: manifest lacks command/config");
      }
      command = manifest["command"];
      config = manifest["config"];
      if (config.contains("seed")) seed = config["seed"].get<uint64_t>();
    } else if (count->parsed()) {
      command = "count";
      config = json{{"set", set_path}};
      if (count_q->count() > 0) config["q"] = q_flag;
    } else if (spectrum->parsed()) {
      command = "spectrum";
      config = json{{"set", set_path}};
      if (spectrum_eps->count() > 0) config["epsilon"] = epsilon;
    } else if (rectify->parsed()) {
      command = "rectify";
      config = json{{"set", set_path}, {"epsilon", epsilon}, {"v", v_flag}, {"k", k_flag}};
    } else if (behrend->parsed()) {
      command = "behrend";
      config = json{{"x", x_flag}};
      if (behrend_q->count() > 0) config["q"] = q_flag;
    } else if (search->parsed()) {
      command = "search";
      if (search_m->count() == 0 && search_rho->count() == 0) {
        die(kExitValidation, "search: provide --m or --rho");
      }
      uint64_t m = m_flag;
      if (search_m->count() == 0) {
        m = static_cast<uint64_t>(std::ceil(rho * static_cast<double>(q_flag) - 1e-9));
      }
      config = json{{"q", q_flag},         {"m", m},
                    {"method", method},     {"seed", seed},
                    {"budget", budget},     {"iterations", iterations},
                    {"restarts", restarts}, {"cooling", cooling},
                    {"threads", threads}};
    } else if (audit->parsed()) {
      command = "audit";
      config = json{{"set", set_path}, {"rho", rho}, {"k", k_terms}, {"budget", budget}};
    } else if (transfer->parsed()) {
      command = "transfer";
      config = json{{"set", set_path}, {"eta", eta},   {"epsilon", epsilon},
                    {"rho", rho},      {"v", v_flag},  {"k", k_flag}};
      if (transfer_p->count() > 0) config["p"] = p_flag;
      if (transfer_b->count() > 0 && transfer_Q->count() > 0) {
        config["b"] = b_flag;
        config["Q"] = big_q;
      }
    } else if (experiment->parsed()) {
      command = "experiment";
      config = json{{"q", q_flag},           {"rho", rho},
                    {"epsilon", epsilon},     {"d", d_flag},
                    {"seed", seed},           {"budget", budget},
                    {"iterations", iterations}, {"restarts", restarts},
                    {"threads", threads}};
    } else if (ratio->parsed()) {
      command = "ratio";
      config = json{{"rho", rho}, {"low", low}, {"high", high}, {"budget", budget}};
    }

    if (out_dir.empty()) out_dir = default_out_dir(seed);
    return finish_run(command, config, out_dir, format, argv_copy);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
