#pragma once

#include <cstdio>
#include <string>

namespace swcap {

/// CSV real: '.' separator, no grouping, 6 significant digits.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string format_bool(bool b) { return b ? "1" : "0"; }

}  // namespace swcap
