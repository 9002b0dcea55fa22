#include "core/set_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"

namespace ap3 {

using nlohmann::json;

ResidueSet read_set_json(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::io, source + ": " + e.what());
  }
  if (!doc.is_object()) fail(Errc::io, source + ": top-level value must be an object");
  if (!doc.contains("q")) fail(Errc::io, source + ": missing field \"q\"");
  if (!doc["q"].is_number_unsigned()) {
    fail(Errc::io, source + ": field \"q\" must be a nonnegative integer");
  }
  if (!doc.contains("elements")) fail(Errc::io, source + ": missing field \"elements\"");
  if (!doc["elements"].is_array()) fail(Errc::io, source + ": field \"elements\" must be an array");

  const uint64_t q = doc["q"].get<uint64_t>();
  std::vector<uint64_t> elements;
  elements.reserve(doc["elements"].size());
  size_t index = 0;
  for (const auto& item : doc["elements"]) {
    const std::string at = source + ": elements[" + std::to_string(index) + "]";
    if (!item.is_number_unsigned()) fail(Errc::io, at + ": expected a nonnegative integer");
    const uint64_t v = item.get<uint64_t>();
    if (q > 0 && v >= q) {
      fail(Errc::io, at + ": value " + std::to_string(v) + " out of range [0, " +
                         std::to_string(q - 1) + "]");
    }
    if (!elements.empty() && v <= elements.back()) {
      fail(Errc::io, at + ": elements must be strictly ascending (" + std::to_string(v) +
                         " after " + std::to_string(elements.back()) + ")");
    }
    elements.push_back(v);
    ++index;
  }
  try {
    return ResidueSet(q, std::move(elements));
  } catch (const Error& e) {
    fail(Errc::io, source + ": field \"q\": " + e.what());
  }
}

ResidueSet read_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open set file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_set_json(buf.str(), path);
}

std::string write_set_json(const ResidueSet& s) {
  json doc;
  doc["q"] = s.modulus();
  doc["elements"] = s.elements();
  return doc.dump();
}

void write_set_file(const ResidueSet& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io, "cannot open output file: " + path);
  out << write_set_json(s) << '\n';
}

}  // namespace ap3
