#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "primecurtain/int128.hpp"

namespace primecurtain {

// One Gaussian prime re + im*i with its norm and angle theta in [0, 2*pi).
// The norm is 2, a rational prime = 1 (mod 4), or p^2 for p = 3 (mod 4).
struct GaussianPrime {
  std::int64_t re;
  std::int64_t im;
  std::uint64_t norm;
  double angle;
};

// Every Gaussian prime with norm <= max_norm — all associates and
// conjugates — sorted by (norm, angle).
struct GaussianPrimeSet {
  std::uint64_t max_norm = 0;
  std::vector<GaussianPrime> primes;
};

// a^2 + b^2 = p with a > b > 0 for a prime p = 1 (mod 4): a square root of
// -1 mod p followed by Euclidean descent (Hermite-Serret).  Composite p or
// p != 1 (mod 4) is an invalid_argument.
std::pair<std::uint64_t, std::uint64_t> two_squares(std::uint64_t p);

// Angle of re + im*i in [0, 2*pi).  Points on the axes and diagonals get
// exact multiples of pi/4 by integer quadrant logic instead of atan2, so
// sector boundaries classify them consistently.
double gaussian_angle(std::int64_t re, std::int64_t im);

GaussianPrimeSet enumerate_gaussian_primes(std::uint64_t max_norm);

struct WalkCheckpoint {
  double x;
  double sum_real;      // sum of cos(n*theta) over norms <= x
  double sum_imag;      // identically 0: conjugate pairs cancel by construction
  std::uint64_t count;  // primes with norm <= x; always even
};

// S(x, n) = sum_{N(pi)<=x} cos(n theta_pi), evaluated by pairing each prime
// with positive imaginary part against its conjugate.  For integer n this is
// the sum of pi^n / N(pi)^{n/2} exactly; n may be any nonzero real.
WalkCheckpoint exp_sum(const GaussianPrimeSet& set, double n, double x);

// Exact Gaussian-integer sum of pi^4 over norms <= x.  The imaginary part
// cancels; the real part is returned as a 128-bit integer.
i128 fourth_power_sum(const GaussianPrimeSet& set, double x);

// Primes with norm <= x and angle in [lo, hi); requires 0 <= lo < hi <= 2*pi.
std::uint64_t sector_count(const GaussianPrimeSet& set, double x, double lo, double hi);

// Random model sample: norm 2 is always present and carries the forced
// angle pi/4 of 1+i; each integer n > 2 appears with probability
// 1/(2 log n) and carries an angle drawn uniformly from [0, pi/4).
// Candidate n draws inclusion at stream index 2n and its angle at 2n+1.
struct GaussianModelSample {
  std::uint64_t seed = 0;
  std::uint64_t max_norm = 0;
  std::vector<std::uint64_t> norms;
  std::vector<double> angles;
};

GaussianModelSample generate_model(std::uint64_t seed, std::uint64_t max_norm);

// X(x) = sum over sampled norms n <= x of 8 cos(4 theta_n); the fixed norm 2
// contributes 8 cos(pi) = -8.
double model_walk(const GaussianModelSample& sample, double x);

}  // namespace primecurtain
