#include "primecurtain/int128.hpp"

#include <algorithm>

namespace primecurtain {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string s;
  while (value > 0) {
    s += static_cast<char>('0' + static_cast<unsigned>(value % 10));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(i128 value) {
  if (value < 0) return "-" + to_string(static_cast<u128>(-value));
  return to_string(static_cast<u128>(value));
}

double to_double(u128 value) {
  // Split into 64-bit halves so the conversion rounds once per half.
  const auto hi = static_cast<std::uint64_t>(value >> 64);
  const auto lo = static_cast<std::uint64_t>(value);
  return static_cast<double>(hi) * 0x1.0p64 + static_cast<double>(lo);
}

double to_double(i128 value) {
  if (value < 0) return -to_double(static_cast<u128>(-value));
  return to_double(static_cast<u128>(value));
}

}  // namespace primecurtain
