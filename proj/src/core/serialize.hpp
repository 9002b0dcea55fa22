#pragma once

#include <string>

#include "core/ap_count.hpp"
#include "core/behrend.hpp"
#include "core/fourier.hpp"
#include "core/rectify.hpp"
#include "core/search.hpp"
#include "core/transfer.hpp"

namespace ap3 {

/// JSON emitters. Output is deterministic (sorted keys, shortest
/// round-trip numbers), so identical inputs yield identical bytes.
std::string to_json_text(const APCountReport& r, int indent = 2);
std::string to_json_text(const SearchResult& r, int indent = 2);
std::string to_json_text(const RectificationCertificate& c, int indent = 2);
std::string to_json_text(const DilationSearchResult& r, int indent = 2);
std::string to_json_text(const BehrendSet& b, int indent = 2);
std::string to_json_text(const EmbeddedSet& e, int indent = 2);
std::string to_json_text(const VarnavidesAudit& a, int indent = 2);
std::string to_json_text(const RqnTable& t, int indent = 2);
std::string to_json_text(const TransferReport& r, int indent = 2);
std::string to_json_text(const OccupancyReport& o, int indent = 2);
std::string to_json_text(const InvarianceProfile& p, int indent = 2);
std::string to_json_text(const ExperimentReport& r, int indent = 2);
std::string to_json_text(const RhoSequence& s, int indent = 2);

/// Plot-ready CSV emitters (locale-independent number formatting).
std::string spectrum_to_csv(const Spectrum& spec);
std::string profile_to_csv(const InvarianceProfile& profile);
std::string rqn_table_to_csv(const RqnTable& table);
std::string minima_row_to_csv(const SearchResult& r);
std::string rho_sequence_to_csv(const RhoSequence& s);

/// Shortest round-trip decimal form of a double (to_chars).
std::string format_double(double value);

}  // namespace ap3
