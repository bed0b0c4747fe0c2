#include "primecurtain/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace primecurtain {

namespace {

void require_index(const PrimeTable& table, std::size_t n) {
  if (n < 2) throw std::invalid_argument("series: n must be >= 2");
  if (n + 1 > table.count())
    throw std::out_of_range("series: table holds " + std::to_string(table.count()) +
                            " primes, need " + std::to_string(n + 1));
}

// Exact numerator p_n p_{n+1} - g_n S_n; |numerator| stays below 2^63 at any
// desk scale, and below 2^53 whenever the table fits in memory, so the
// double conversion is exact.
i128 diff_numerator(const PrimeTable& table, std::size_t n) {
  const i128 p = table.primes[n - 1];
  const i128 q = table.primes[n];
  const i128 g = q - p;
  return p * q - g * static_cast<i128>(table.prefix_sums[n - 1]);
}

double ratio_sum_over_pq(const PrimeTable& table, std::size_t n) {
  const double p = static_cast<double>(table.primes[n - 1]);
  const double q = static_cast<double>(table.primes[n]);
  return to_double(table.prefix_sums[n - 1]) / (p * q);
}

}  // namespace

double corrected_diff(const PrimeTable& table, std::size_t n) {
  require_index(table, n);
  const double p = static_cast<double>(table.primes[n - 1]);
  const double q = static_cast<double>(table.primes[n]);
  return to_double(diff_numerator(table, n)) / (p * q);
}

double uncorrected_diff(const PrimeTable& table, std::size_t n) {
  require_index(table, n);
  const double p = static_cast<double>(table.primes[n - 1]);
  const double q = static_cast<double>(table.primes[n]);
  const double g = q - p;
  return -g * to_double(table.prefix_sums[n - 1]) / (p * q);
}

double key_ratio(const PrimeTable& table, std::size_t n) {
  require_index(table, n);
  return std::log(static_cast<double>(n)) * ratio_sum_over_pq(table, n);
}

double expansion_value(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("expansion_value: n must be >= 3");
  const double log_n = std::log(static_cast<double>(n));
  return 0.5 - std::log(log_n) / (2.0 * log_n) + 1.0 / (4.0 * log_n);
}

std::vector<SeriesPoint> build_series(const PrimeTable& table, std::size_t max_n) {
  require_index(table, max_n);
  std::vector<SeriesPoint> points;
  points.reserve(max_n - 1);
  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::uint64_t p = table.primes[n - 1];
    const std::uint64_t q = table.primes[n];
    const i128 numerator = diff_numerator(table, n);
    const double diff = to_double(numerator) / (static_cast<double>(p) * static_cast<double>(q));

    SeriesPoint pt;
    pt.n = n;
    pt.log_n = std::log(static_cast<double>(n));
    pt.a_n = to_double(table.prefix_sums[n - 1]) / static_cast<double>(p);
    pt.diff = diff;
    pt.gap = q - p;
    pt.scaled_ratio = pt.log_n * ratio_sum_over_pq(table, n);
    pt.sign = numerator > 0 ? Sign::positive : (numerator < 0 ? Sign::negative : Sign::zero);
    if (pt.sign != Sign::zero) pt.loglog_y = std::log(std::fabs(diff));
    points.push_back(pt);
  }
  return points;
}

std::vector<std::pair<std::uint64_t, double>> scaled_gap_series(const PrimeTable& table,
                                                                std::size_t max_n) {
  require_index(table, max_n);
  std::vector<std::pair<std::uint64_t, double>> out;
  out.reserve(max_n - 1);
  for (std::size_t n = 2; n <= max_n; ++n) {
    // (p_n - p_{n+1}) * r_n, evaluated through key_ratio's expression so
    // dividing the gap back out recovers r_n to the last ulp.
    const double neg_gap = static_cast<double>(table.primes[n - 1]) -
                           static_cast<double>(table.primes[n]);
    out.emplace_back(n, neg_gap * key_ratio(table, n));
  }
  return out;
}

std::vector<CurtainGroup> group_curtains(const std::vector<SeriesPoint>& points) {
  std::map<std::uint64_t, CurtainGroup> by_gap;
  for (const SeriesPoint& pt : points) {
    CurtainGroup& group = by_gap[pt.gap];
    if (group.points.empty()) {
      group.gap = pt.gap;
      group.predicted_trough_log_n = static_cast<double>(pt.gap) / 2.0;
    }
    group.points.push_back(pt);
  }
  std::vector<CurtainGroup> out;
  out.reserve(by_gap.size());
  for (auto& [gap, group] : by_gap) out.push_back(std::move(group));
  return out;
}

std::optional<double> detect_trough(const CurtainGroup& group, std::size_t min_side_points) {
  if (group.points.size() < std::max<std::size_t>(min_side_points, 2)) return std::nullopt;
  const double center = static_cast<double>(group.gap) / 2.0;
  bool below = false, above = false;
  for (const SeriesPoint& pt : group.points) {
    below = below || pt.log_n < center;
    above = above || pt.log_n > center;
  }
  if (!below || !above) return std::nullopt;

  const SeriesPoint* best = nullptr;
  for (const SeriesPoint& pt : group.points)
    if (best == nullptr || std::fabs(pt.diff) < std::fabs(best->diff)) best = &pt;
  return best->log_n;
}

ExtremeStats extreme_stats(const std::vector<SeriesPoint>& points) {
  if (points.empty()) throw std::invalid_argument("extreme_stats: empty input");
  ExtremeStats stats{points.front().diff, points.front().diff, 0.0};
  for (const SeriesPoint& pt : points) {
    stats.max_diff = std::max(stats.max_diff, pt.diff);
    stats.min_diff = std::min(stats.min_diff, pt.diff);
    stats.max_scaled_negative =
        std::max(stats.max_scaled_negative, static_cast<double>(pt.gap) / (2.0 * pt.log_n));
  }
  return stats;
}

}  // namespace primecurtain
