#pragma once

#include <cstdio>
#include <string>

namespace fibpart {

/// Fixed 12-significant-digit rendering used by every text and CSV output.
inline std::string format_real(double x, int significant = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, x);
  return buf;
}

}  // namespace fibpart
