#pragma once

#include <span>
#include <string>
#include <vector>

namespace gqa {

/// Round-trip-exact double: '.' decimal separator, 17 significant digits.
std::string csv_double(double v);

/// Space-separated csv_double values in one CSV field.
std::string csv_join(std::span<const double> values);

/// Comma-joined row (no trailing newline). Fields must not contain commas.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace gqa
