#pragma once

#include <cstdint>

namespace primecurtain {

// Counter-based splitmix64.  Draw i depends only on (seed, i), so a model
// candidate always consumes exactly one value at a fixed stream index no
// matter what was accepted before it; realizations with different limits
// therefore share a common prefix, and distinct indices can be drawn in
// parallel.  Bit-compatibility is guaranteed within one build, not across
// languages.
struct IndexedRng {
  std::uint64_t seed = 0;

  std::uint64_t bits(std::uint64_t index) const {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform(std::uint64_t index) const {
    return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
  }
};

}  // namespace primecurtain
