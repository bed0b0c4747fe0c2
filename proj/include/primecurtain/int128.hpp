#pragma once

#include <cstdint>
#include <string>

namespace primecurtain {

// 128-bit integers carry the exact prefix sums and fourth-power sums; they
// are converted to floating point only at the final ratio step.
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string(u128 value);
std::string to_string(i128 value);

// Exact for |value| < 2^53, correctly rounded beyond.
double to_double(u128 value);
double to_double(i128 value);

}  // namespace primecurtain
