#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace marp {

// Locale-independent float formatting with a fixed number of significant
// digits. All canonical file formats go through this helper so that output
// bytes depend only on the value.
inline std::string format_double(double v, int significant_digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, significant_digits);
  return std::string(buf, res.ptr);
}

// Round-trips a value through its 9-significant-digit decimal form. Applied
// at generation time so instances survive save/load bit-exactly.
inline double canonical9(double v) {
  const std::string s = format_double(v, 9);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

}  // namespace marp
