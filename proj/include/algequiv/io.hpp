#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "algequiv/field.hpp"
#include "algequiv/msc.hpp"

namespace algequiv {

// Algebra file (JSON):
//   {"dim": m,
//    "field": {"kind": "rational"} | {"kind": "prime", "p": <odd prime>},
//    "constants": [m rows of m^2 scalar strings]}
// Column j*m + k of row i holds A^i_{jk} (zero-based).

/// Throws ParseError (or InvalidField for a bad modulus).
Msc parse_algebra(std::string_view text);
/// Canonical text; parse_algebra(format_algebra(a)) == a.
std::string format_algebra(const Msc& a);

Msc read_algebra_file(const std::filesystem::path& path);

/// "rational" or "prime:<p>".
FieldSpec parse_field_flag(std::string_view text);

}  // namespace algequiv
