#pragma once

#include <string>

namespace pats::detail {

// Escapes a string for inclusion in a JSON document (quotes not included).
std::string json_escape(const std::string& s);

// Fixed-point decimal rendering, e.g. fmt_fixed(7.0, 6) -> "7.000000".
std::string fmt_fixed(double value, int digits);

// Rounds to the given number of fractional decimal digits.
double round_decimals(double value, int digits);

}  // namespace pats::detail
