#pragma once

#include <string>

namespace topopush {

// Shortest decimal text that parses back to exactly `v`. "inf"/"-inf"/"nan" for non-finite.
std::string format_double(double v);

// Fixed-point text with `precision` digits after the decimal point.
std::string format_fixed(double v, int precision);

}  // namespace topopush
