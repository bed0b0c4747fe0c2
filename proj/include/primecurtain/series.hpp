#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "primecurtain/primes.hpp"

namespace primecurtain {

enum class Sign { negative = -1, zero = 0, positive = 1 };

// One row of the ratio-series analysis at index n, with
//   a_n  = S_n / p_n,
//   diff = S_{n+1}/p_{n+1} - S_n/p_n   (index-corrected difference),
//   scaled_ratio = log n * S_n / (p_n p_{n+1}).
// diff is evaluated through the exact integer identity
//   diff = (p_n p_{n+1} - g_n S_n) / (p_n p_{n+1}),
// whose numerator is formed in 128-bit arithmetic, so the value keeps full
// relative precision even where the difference nearly vanishes.  The sign is
// taken from the integer numerator and is therefore exact.
struct SeriesPoint {
  std::uint64_t n;
  double log_n;
  double a_n;
  double diff;
  std::uint64_t gap;  // p_{n+1} - p_n
  double scaled_ratio;
  std::optional<double> loglog_y;  // log|diff|, absent when diff == 0
  Sign sign;
};

// All points with one fixed prime gap; the trough of its curtain is
// predicted at log n = gap/2.
struct CurtainGroup {
  std::uint64_t gap = 0;
  std::vector<SeriesPoint> points;
  double predicted_trough_log_n = 0.0;
  std::optional<double> detected_trough_log_n;
};

// Points for n = 2..max_n.  Needs max_n + 1 primes in the table
// (std::out_of_range otherwise); max_n < 2 is std::invalid_argument.
std::vector<SeriesPoint> build_series(const PrimeTable& table, std::size_t max_n);

// Index-corrected difference S_{n+1}/p_{n+1} - S_n/p_n via the exact
// integer numerator.
double corrected_diff(const PrimeTable& table, std::size_t n);

// Same-sum difference S_n/p_{n+1} - S_n/p_n = -g_n S_n/(p_n p_{n+1});
// always negative.
double uncorrected_diff(const PrimeTable& table, std::size_t n);

// r_n = log n * S_n / (p_n p_{n+1}); tends to 1/2.
double key_ratio(const PrimeTable& table, std::size_t n);

// Three-term expansion of r_n: 1/2 - loglog n/(2 log n) + 1/(4 log n).
// Requires n >= 3 (std::invalid_argument otherwise).
double expansion_value(std::uint64_t n);

// (n, log n * uncorrected difference) for n = 2..max_n; the values settle
// into one descending level per prime gap, near (p_n - p_{n+1})/2.
std::vector<std::pair<std::uint64_t, double>> scaled_gap_series(const PrimeTable& table,
                                                                std::size_t max_n);

// Partition points by gap value, ascending by gap; every input point lands
// in exactly one group.
std::vector<CurtainGroup> group_curtains(const std::vector<SeriesPoint>& points);

// log n* of the group member minimizing |diff| (smallest n on ties).
// Requires at least min_side_points members in total and at least one member
// on each side of log n = gap/2, so the minimum is bracketed; otherwise
// nullopt.
std::optional<double> detect_trough(const CurtainGroup& group,
                                    std::size_t min_side_points = 10);

struct ExtremeStats {
  double max_diff;
  double min_diff;
  double max_scaled_negative;  // max over points of gap / (2 log n)
};

// Extremes over a nonempty point set (std::invalid_argument when empty).
ExtremeStats extreme_stats(const std::vector<SeriesPoint>& points);

}  // namespace primecurtain
