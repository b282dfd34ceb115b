#pragma once

#include <string>

namespace cmlab {

/// Locale-independent rendering with 17 significant digits,
/// enough to round-trip any double.
std::string format_double(double value);

/// Inverse of format_double (also accepts "inf", "-inf", "nan").
double parse_double(const std::string& text);

}  // namespace cmlab
