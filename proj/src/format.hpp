#pragma once

#include <charconv>
#include <string>

namespace repchain {

// Shortest representation that round-trips exactly.
inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace repchain
