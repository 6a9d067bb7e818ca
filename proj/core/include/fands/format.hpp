#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace fands {

/// Shortest round-trip decimal form of a double ("150", "56.25"). Keeps text
/// outputs byte-stable across runs.
inline std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "0";
  return std::string(buf, ptr);
}

} // namespace fands
