#pragma once

#include <string>

#include "core/residue_set.hpp"

namespace ap3 {

/// Parses the set file format {"q": <int>, "elements": [<int>...]} with
/// elements sorted strictly ascending. Violations raise Errc::io with a
/// diagnostic naming the offending field or array index.
ResidueSet read_set_json(const std::string& text, const std::string& source = "set");

ResidueSet read_set_file(const std::string& path);

std::string write_set_json(const ResidueSet& s);

void write_set_file(const ResidueSet& s, const std::string& path);

}  // namespace ap3
