#include "topopush/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace topopush {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int precision) {
  if (!std::isfinite(v)) return format_double(v);
  char buf[128];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  if (res.ec != std::errc{}) return format_double(v);
  return std::string(buf, res.ptr);
}

}  // namespace topopush
