#pragma once

#include "prenichols/braiding.hpp"

#include <string>

namespace prenichols {

// { "theta": n, "entries": [[scalar-string]] }
BraidingMatrix load_braiding_file(const std::string& path);

// Either a braiding file or a root-datum file
// { "braiding": {...}, "positive_roots": [[int]],
//   optional "N_beta": [int], "cartan_flags": [bool], "family_tag": str }.
// Omitted fields are computed; present ones are validated.
RootDatum load_datum(const std::string& path);

void save_braiding_file(const std::string& path, const BraidingMatrix& b);

} // namespace prenichols
