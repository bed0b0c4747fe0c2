#include "primecurtain/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primecurtain {

std::uint64_t PrimeTable::nth_prime(std::size_t n) const {
  if (n < 1 || n > primes.size())
    throw std::out_of_range("nth_prime: n=" + std::to_string(n) +
                            " outside [1, " + std::to_string(primes.size()) + "]");
  return primes[n - 1];
}

u128 PrimeTable::prefix_sum(std::size_t n) const {
  if (n < 1 || n > prefix_sums.size())
    throw std::out_of_range("prefix_sum: n=" + std::to_string(n) +
                            " outside [1, " + std::to_string(prefix_sums.size()) + "]");
  return prefix_sums[n - 1];
}

std::uint64_t PrimeTable::gap(std::size_t n) const {
  if (n < 1 || n >= primes.size())
    throw std::out_of_range("gap: n=" + std::to_string(n) +
                            " outside [1, " + std::to_string(primes.size()) + ")");
  return gaps[n - 1];
}

PrimeTable build_prime_table(std::uint64_t limit, std::size_t segment_size) {
  if (limit < 2) throw std::invalid_argument("build_prime_table: limit must be >= 2");
  if (segment_size < 8) segment_size = 8;

  PrimeTable table;
  table.limit = limit;

  // Base primes up to sqrt(limit) by a plain sieve; the floating sqrt is
  // nudged so root*root >= limit holds exactly.
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root > 2 && root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;
  ++root;
  std::vector<char> is_prime(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!is_prime[i]) continue;
    if (i * i <= root)
      for (std::uint64_t j = i * i; j <= root; j += i) is_prime[j] = 0;
    base.push_back(i);
  }

  std::vector<char> segment(segment_size);
  for (std::uint64_t low = 2; low <= limit; low += segment_size) {
    const std::uint64_t high = std::min(low + segment_size - 1, limit);
    std::fill(segment.begin(), segment.begin() + (high - low + 1), 1);
    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (std::uint64_t v = low; v <= high; ++v)
      if (segment[v - low]) table.primes.push_back(v);
  }

  table.gaps.reserve(table.primes.empty() ? 0 : table.primes.size() - 1);
  table.prefix_sums.reserve(table.primes.size());
  u128 running = 0;
  for (std::size_t i = 0; i < table.primes.size(); ++i) {
    running += table.primes[i];
    table.prefix_sums.push_back(running);
    if (i + 1 < table.primes.size())
      table.gaps.push_back(static_cast<std::uint32_t>(table.primes[i + 1] - table.primes[i]));
  }
  return table;
}

std::uint64_t sieve_limit_for_count(std::size_t n) {
  if (n < 6) return 16;
  // p_n < n (log n + log log n) for n >= 6 (Rosser).
  const double x = static_cast<double>(n);
  const double bound = x * (std::log(x) + std::log(std::log(x)));
  return static_cast<std::uint64_t>(bound) + 16;
}

}  // namespace primecurtain
