#include "core/serialize.hpp"

#include <charconv>

#include <json.hpp>

namespace ap3 {

using nlohmann::json;

namespace {

json count_json(const APCountReport& r) {
  return json{{"q", r.q},           {"size", r.size},
              {"total", r.total},   {"trivial", r.trivial},
              {"nontrivial", r.nontrivial}, {"mu_num", r.mu_num()},
              {"mu_den", r.mu_den()}};
}

json search_json(const SearchResult& r) {
  return json{{"q", r.report.q},       {"m", r.report.size},
              {"method", r.method},    {"seed", r.seed},
              {"iterations", r.iterations}, {"proven", r.proven},
              {"optimality", r.proven ? "proven" : "heuristic"},
              {"witness", r.best.elements()}, {"report", count_json(r.report)}};
}

json certificate_json(const RectificationCertificate& c) {
  return json{{"h", c.h},
              {"j", c.j},
              {"k", c.k},
              {"v", c.v},
              {"epsilon", c.epsilon},
              {"rho", c.rho},
              {"freq_bound", c.freq_bound},
              {"verified", c.verified},
              {"vacuous", c.vacuous},
              {"status", c.vacuous ? "vacuous" : (c.verified ? "verified" : "failed")},
              {"equality_hits", c.equality_hits},
              {"large_frequencies", c.large_frequencies},
              {"violators", c.violators}};
}

json dilation_json(const DilationSearchResult& r) {
  return json{{"found", r.found},
              {"j", r.j},
              {"h", r.h},
              {"bound", r.bound},
              {"pigeonhole_ok", r.pigeonhole_ok},
              {"vacuous", r.vacuous},
              {"equality_hits", r.equality_hits},
              {"positive_frequencies", r.positive_frequencies}};
}

json behrend_json(const BehrendSet& b) {
  return json{{"x", b.x},
              {"method", b.method},
              {"dimension", b.dimension},
              {"base", b.base},
              {"radius_sq", b.radius_sq},
              {"size", b.elements.size()},
              {"elements", b.elements}};
}

json occupancy_json(const OccupancyReport& o) {
  return json{{"occupied", o.occupied}, {"singles", o.singles}, {"doubles", o.doubles}};
}

json transfer_json(const TransferReport& r) {
  return json{{"q", r.q},
              {"p", r.p},
              {"delta_num", r.delta_num},
              {"delta_den", 2},
              {"total_q", r.total_q},
              {"total_p", r.total_p},
              {"total_p_collapsed", r.total_p_collapsed},
              {"mu_q", r.mu_q},
              {"mu_p", r.mu_p},
              {"mu_p_collapsed", r.mu_p_collapsed},
              {"predicted", r.predicted},
              {"residual", r.residual},
              {"residual_num", r.residual_num},
              {"residual_den", r.residual_den_is_q_cubed},
              {"epsilon", r.epsilon},
              {"rho", r.rho},
              {"v", r.v},
              {"k", r.k}};
}

json profile_json(const InvarianceProfile& p) {
  return json{{"b", p.b}, {"d", p.d}, {"score", p.score}, {"values", p.values}};
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string to_json_text(const APCountReport& r, int indent) { return count_json(r).dump(indent); }

std::string to_json_text(const SearchResult& r, int indent) { return search_json(r).dump(indent); }

std::string to_json_text(const RectificationCertificate& c, int indent) {
  return certificate_json(c).dump(indent);
}

std::string to_json_text(const DilationSearchResult& r, int indent) {
  return dilation_json(r).dump(indent);
}

std::string to_json_text(const BehrendSet& b, int indent) { return behrend_json(b).dump(indent); }

std::string to_json_text(const EmbeddedSet& e, int indent) {
  json doc{{"q", e.t.modulus()},
           {"replication", e.replication},
           {"rho_target", e.rho_target},
           {"density", e.t.density()},
           {"size", e.t.size()},
           {"elements", e.t.elements()},
           {"source", behrend_json(e.source)}};
  return doc.dump(indent);
}

std::string to_json_text(const VarnavidesAudit& a, int indent) {
  json doc{{"q", a.q},
           {"k", a.k},
           {"set_size", a.set_size},
           {"rho", a.rho},
           {"sum_hits", a.sum_hits},
           {"expected_hits", a.expected_hits},
           {"identity_ok", a.identity_ok},
           {"rich_count", a.rich_count},
           {"chain_value", a.chain_value},
           {"total", a.total},
           {"chain_ok", a.chain_ok}};
  return doc.dump(indent);
}

std::string to_json_text(const RqnTable& t, int indent) {
  json rows = json::array();
  for (const RqnRow& row : t.rows) {
    rows.push_back(json{{"q", row.q},
                        {"m", row.m},
                        {"min_nontrivial", row.min_nontrivial},
                        {"witness", row.witness}});
  }
  json doc{{"rho", t.rho},
           {"ratio", t.zero_min && t.ratio != 1.0 ? json("inf") : json(t.ratio)},
           {"zero_min", t.zero_min},
           {"rows", rows}};
  return doc.dump(indent);
}

std::string to_json_text(const TransferReport& r, int indent) {
  return transfer_json(r).dump(indent);
}

std::string to_json_text(const OccupancyReport& o, int indent) {
  return occupancy_json(o).dump(indent);
}

std::string to_json_text(const InvarianceProfile& p, int indent) {
  return profile_json(p).dump(indent);
}

std::string to_json_text(const ExperimentReport& r, int indent) {
  json sweep = json::array();
  for (const VSweepEntry& entry : r.sweep) {
    sweep.push_back(json{{"v", entry.v},
                         {"w_intersection", entry.w_intersection},
                         {"split_zero", entry.split_zero},
                         {"split_shift", entry.split_shift},
                         {"disjointness_ok", entry.disjointness_ok},
                         {"identity_ok", entry.identity_ok},
                         {"count_preserved", entry.count_preserved},
                         {"occupancy", occupancy_json(entry.occupancy)},
                         {"occupancy_ok", entry.occupancy_ok},
                         {"split_matches_doubles", entry.split_matches_doubles}});
  }
  json doc{{"params", json{{"q", r.q},
                           {"rho", r.rho},
                           {"epsilon", r.epsilon},
                           {"d", r.d},
                           {"seed", r.seed}}},
           {"degenerate", r.degenerate},
           {"search", search_json(r.search)},
           {"dilation", dilation_json(r.dilation)},
           {"s_count", count_json(r.s_count)},
           {"s_prime_count", count_json(r.s_prime_count)},
           {"companion", json{{"p", r.companion.p},
                              {"in_strict_interval", r.companion.in_strict_interval}}},
           {"certificate", certificate_json(r.certificate)},
           {"sweep", sweep},
           {"profile_shift", r.profile_shift},
           {"profile", profile_json(r.profile)},
           {"transfer", transfer_json(r.transfer)},
           {"all_checks_ok", r.all_checks_ok}};
  return doc.dump(indent);
}

std::string to_json_text(const RhoSequence& s, int indent) {
  json doc{{"values", s.values}, {"truncated", s.truncated}};
  return doc.dump(indent);
}

std::string spectrum_to_csv(const Spectrum& spec) {
  std::string out = "a,re,im,abs\n";
  for (int64_t a = spec.min_freq(); a <= spec.max_freq(); ++a) {
    const std::complex<double> c = spec.coeff(a);
    out += std::to_string(a);
    out += ',';
    out += format_double(c.real());
    out += ',';
    out += format_double(c.imag());
    out += ',';
    out += format_double(std::abs(c));
    out += '\n';
  }
  return out;
}

std::string profile_to_csv(const InvarianceProfile& profile) {
  std::string out = "j,intersection\n";
  for (size_t j = 0; j < profile.values.size(); ++j) {
    out += std::to_string(j);
    out += ',';
    out += std::to_string(profile.values[j]);
    out += '\n';
  }
  return out;
}

std::string rqn_table_to_csv(const RqnTable& table) {
  std::string out = "q,m,min_nontrivial,witness\n";
  for (const RqnRow& row : table.rows) {
    out += std::to_string(row.q);
    out += ',';
    out += std::to_string(row.m);
    out += ',';
    out += std::to_string(row.min_nontrivial);
    out += ',';
    for (size_t i = 0; i < row.witness.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(row.witness[i]);
    }
    out += '\n';
  }
  return out;
}

std::string minima_row_to_csv(const SearchResult& r) {
  std::string out = "q,m,min_nontrivial,witness\n";
  out += std::to_string(r.report.q);
  out += ',';
  out += std::to_string(r.report.size);
  out += ',';
  out += std::to_string(r.report.nontrivial);
  out += ',';
  const auto& witness = r.best.elements();
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(witness[i]);
  }
  out += '\n';
  return out;
}

std::string rho_sequence_to_csv(const RhoSequence& s) {
  std::string out = "n,x\n";
  for (size_t i = 0; i < s.values.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(s.values[i]);
    out += '\n';
  }
  return out;
}

}  // namespace ap3
