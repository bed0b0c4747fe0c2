#include "primecurtain/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primecurtain/primes.hpp"
#include "primecurtain/rng.hpp"

namespace primecurtain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin; the fixed base set decides every 64-bit input.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> two_squares(std::uint64_t p) {
  if (p % 4 != 1) throw std::invalid_argument("two_squares: p must be 1 mod 4");
  if (!is_prime_u64(p)) throw std::invalid_argument("two_squares: p must be prime");

  // z^2 = -1 (mod p) from a quadratic non-residue q: z = q^((p-1)/4).
  std::uint64_t z = 0;
  for (std::uint64_t q = 2;; ++q) {
    if (powmod(q, (p - 1) / 2, p) == p - 1) {
      z = powmod(q, (p - 1) / 4, p);
      break;
    }
  }
  if (z > p / 2) z = p - z;

  // Euclidean descent: the first remainder below sqrt(p) and the next one
  // are the two squares.
  std::uint64_t a = p, b = z;
  while (static_cast<u128>(b) * b > p) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  const std::uint64_t c = a % b;
  return b > c ? std::make_pair(b, c) : std::make_pair(c, b);
}

double gaussian_angle(std::int64_t re, std::int64_t im) {
  if (im == 0) return re > 0 ? 0.0 : kPi;
  if (re == 0) return im > 0 ? 0.5 * kPi : 1.5 * kPi;
  if (re == im) return re > 0 ? 0.25 * kPi : 1.25 * kPi;
  if (re == -im) return im > 0 ? 0.75 * kPi : 1.75 * kPi;
  double a = std::atan2(static_cast<double>(im), static_cast<double>(re));
  if (a < 0) a += kTwoPi;
  return a;
}

GaussianPrimeSet enumerate_gaussian_primes(std::uint64_t max_norm) {
  if (max_norm < 2) throw std::invalid_argument("enumerate_gaussian_primes: max_norm must be >= 2");

  GaussianPrimeSet set;
  set.max_norm = max_norm;
  auto& out = set.primes;

  const auto push = [&out](std::int64_t re, std::int64_t im, std::uint64_t norm) {
    out.push_back(GaussianPrime{re, im, norm, gaussian_angle(re, im)});
  };

  // Norm 2: the four associates of 1+i.
  push(1, 1, 2);
  push(-1, 1, 2);
  push(-1, -1, 2);
  push(1, -1, 2);

  const PrimeTable table = build_prime_table(max_norm);
  for (std::uint64_t p : table.primes) {
    if (p % 4 == 1) {
      // Eight elements per split prime: +-a+-bi and +-b+-ai.
      const auto [a, b] = two_squares(p);
      const auto sa = static_cast<std::int64_t>(a);
      const auto sb = static_cast<std::int64_t>(b);
      push(sa, sb, p);
      push(sa, -sb, p);
      push(-sa, sb, p);
      push(-sa, -sb, p);
      push(sb, sa, p);
      push(sb, -sa, p);
      push(-sb, sa, p);
      push(-sb, -sa, p);
    } else if (p % 4 == 3 && p <= max_norm / p) {
      // Inert primes enter with norm p^2, on the axes.
      const auto sp = static_cast<std::int64_t>(p);
      push(sp, 0, p * p);
      push(0, sp, p * p);
      push(-sp, 0, p * p);
      push(0, -sp, p * p);
    }
  }

  std::sort(out.begin(), out.end(), [](const GaussianPrime& l, const GaussianPrime& r) {
    if (l.norm != r.norm) return l.norm < r.norm;
    return l.angle < r.angle;
  });
  return set;
}

namespace {

void require_coverage(const GaussianPrimeSet& set, double x, const char* name) {
  if (x > static_cast<double>(set.max_norm))
    throw std::out_of_range(std::string(name) + ": x exceeds enumerated max_norm " +
                            std::to_string(set.max_norm));
}

}  // namespace

WalkCheckpoint exp_sum(const GaussianPrimeSet& set, double n, double x) {
  if (n == 0.0) throw std::invalid_argument("exp_sum: n must be nonzero");
  require_coverage(set, x, "exp_sum");

  double sum = 0.0;
  std::uint64_t count = 0;
  for (const GaussianPrime& gp : set.primes) {
    if (static_cast<double>(gp.norm) > x) break;
    ++count;
    if (gp.im > 0) {
      // Conjugate pair (gp, conj gp): imaginary parts cancel identically.
      sum += std::cos(n * gp.angle) + std::cos(n * (kTwoPi - gp.angle));
    } else if (gp.im == 0) {
      sum += std::cos(n * gp.angle);
    }
  }
  return WalkCheckpoint{x, sum, 0.0, count};
}

i128 fourth_power_sum(const GaussianPrimeSet& set, double x) {
  require_coverage(set, x, "fourth_power_sum");
  i128 sum_re = 0, sum_im = 0;
  for (const GaussianPrime& gp : set.primes) {
    if (static_cast<double>(gp.norm) > x) break;
    const i128 a = gp.re, b = gp.im;
    const i128 a2 = a * a, b2 = b * b;
    sum_re += a2 * a2 - 6 * a2 * b2 + b2 * b2;
    sum_im += 4 * a * b * (a2 - b2);
  }
  if (sum_im != 0) throw std::logic_error("fourth_power_sum: imaginary part did not cancel");
  return sum_re;
}

std::uint64_t sector_count(const GaussianPrimeSet& set, double x, double lo, double hi) {
  if (!(lo >= 0.0 && lo < hi && hi <= kTwoPi))
    throw std::invalid_argument("sector_count: need 0 <= lo < hi <= 2*pi");
  require_coverage(set, x, "sector_count");
  std::uint64_t count = 0;
  for (const GaussianPrime& gp : set.primes) {
    if (static_cast<double>(gp.norm) > x) break;
    if (gp.angle >= lo && gp.angle < hi) ++count;
  }
  return count;
}

GaussianModelSample generate_model(std::uint64_t seed, std::uint64_t max_norm) {
  if (max_norm < 2) throw std::invalid_argument("generate_model: max_norm must be >= 2");

  GaussianModelSample sample;
  sample.seed = seed;
  sample.max_norm = max_norm;
  sample.norms.push_back(2);
  sample.angles.push_back(0.25 * kPi);  // forced angle of 1+i

  const IndexedRng rng{seed};
  for (std::uint64_t n = 3; n <= max_norm; ++n) {
    const double p = 1.0 / (2.0 * std::log(static_cast<double>(n)));
    if (rng.uniform(2 * n) < p) {
      sample.norms.push_back(n);
      sample.angles.push_back(rng.uniform(2 * n + 1) * (0.25 * kPi));
    }
  }
  return sample;
}

double model_walk(const GaussianModelSample& sample, double x) {
  if (x > static_cast<double>(sample.max_norm))
    throw std::out_of_range("model_walk: x exceeds sampled max_norm");
  double sum = 0.0;
  for (std::size_t i = 0; i < sample.norms.size(); ++i) {
    if (static_cast<double>(sample.norms[i]) > x) break;
    sum += 8.0 * std::cos(4.0 * sample.angles[i]);
  }
  return sum;
}

}  // namespace primecurtain
