#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "primecurtain/int128.hpp"

namespace primecurtain {

// Rational primes p_1 = 2, p_2 = 3, ... up to `limit`, together with the
// gaps g_n = p_{n+1} - p_n and the exact prefix sums S_n = sum_{m<=n} p_m.
// Prefix sums are 128-bit integers: S_n ~ n^2 log(n)/2 leaves 64 bits near
// n ~ 3e8, so no floating point ever touches them.  Indexing is 1-based to
// match the usual p_n convention.  The table is immutable after
// construction and safe for concurrent reads.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;   // primes[i] = p_{i+1}
  std::vector<std::uint32_t> gaps;     // gaps[i] = p_{i+2} - p_{i+1}
  std::vector<u128> prefix_sums;       // prefix_sums[i] = S_{i+1}

  std::size_t count() const { return primes.size(); }

  // p_n.  Throws std::out_of_range unless 1 <= n <= count().
  std::uint64_t nth_prime(std::size_t n) const;

  // Exact S_n.  Throws std::out_of_range unless 1 <= n <= count().
  u128 prefix_sum(std::size_t n) const;

  // g_n = p_{n+1} - p_n.  Throws std::out_of_range unless 1 <= n < count().
  std::uint64_t gap(std::size_t n) const;
};

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 16;

// Segmented sieve of Eratosthenes over [2, limit].  The segment size only
// affects memory traffic; the resulting table is identical for any choice.
// Throws std::invalid_argument for limit < 2.
PrimeTable build_prime_table(std::uint64_t limit,
                             std::size_t segment_size = kDefaultSegmentSize);

// A sieve limit guaranteed to yield at least n primes (p_n upper bound).
std::uint64_t sieve_limit_for_count(std::size_t n);

}  // namespace primecurtain
