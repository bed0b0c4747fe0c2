#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "primecurtain/series.hpp"

using namespace primecurtain;

namespace {

const PrimeTable& fixture_table() {
  static const PrimeTable table = build_prime_table(300'000);  // ~25k primes
  return table;
}

double rel_dev(double a, long double b) {
  return static_cast<double>(std::fabs(static_cast<long double>(a) - b) /
                             std::max ({1.0L, std::fabs((long double)a), std::fabs(b)}));
}

}  // namespace

TEST_CASE("first points by hand arithmetic") {
  const auto points = build_series(fixture_table(), 10);
  REQUIRE(points.size() == 9);
  CHECK(points.front().n == 2);
  CHECK(points.front().gap == 2);  // 5 - 3

  const SeriesPoint& p4 = points[2];
  REQUIRE(p4.n == 4);
  CHECK(p4.a_n == doctest::Approx(17.0 / 7.0).epsilon(1e-15));
  CHECK(p4.diff == doctest::Approx(9.0 / 77.0).epsilon(1e-14));
  CHECK(p4.gap == 4);
  CHECK(p4.scaled_ratio ==
        doctest::Approx(std::log(4.0) * 17.0 / (7.0 * 11.0)).epsilon(1e-14));
  CHECK(p4.scaled_ratio == doctest::Approx(0.3060650).epsilon(1e-6));
  CHECK(p4.sign == Sign::positive);
  REQUIRE(p4.loglog_y.has_value());
  CHECK(*p4.loglog_y == doctest::Approx(std::log(9.0 / 77.0)).epsilon(1e-14));

  // a_5 = 28/11, so diff at n=4 is 28/11 - 17/7.
  CHECK(p4.diff == doctest::Approx(28.0 / 11.0 - 17.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("key_ratio values and band") {
  const PrimeTable& t = fixture_table();
  CHECK(key_ratio(t, 4) == doctest::Approx(0.3060650).epsilon(1e-6));
  CHECK(key_ratio(t, 1000) == doctest::Approx(std::log(1000.0) * 3682913.0 /
                                              (7919.0 * 7927.0))
                                  .epsilon(1e-14));
  // Inside (0.25, 0.5) from 1e3 up through the fixture range.
  for (std::size_t n = 1000; n + 1 < t.count(); n += 53) {
    const double r = key_ratio(t, n);
    CHECK(r > 0.25);
    CHECK(r < 0.5);
  }
}

TEST_CASE("expansion_value") {
  CHECK_THROWS_AS(expansion_value(2), std::invalid_argument);
  CHECK(expansion_value(15) == doctest::Approx(0.408377).epsilon(1e-5));
  CHECK(expansion_value(1'000'000) == doctest::Approx(0.423064).epsilon(1e-5));
  // Drifts upward toward 1/2.
  CHECK(expansion_value(100) < expansion_value(10'000));
  CHECK(expansion_value(10'000) < expansion_value(100'000'000));
  CHECK(expansion_value(100'000'000) < 0.5);
}

TEST_CASE("key_ratio approaches the expansion") {
  const PrimeTable& t = fixture_table();
  const double dev = std::fabs(key_ratio(t, 10'000) - expansion_value(10'000));
  CHECK(dev <= 0.75 / std::log(1e4));
}

TEST_CASE("scaled_gap_series values and identity") {
  const PrimeTable& t = fixture_table();
  const auto series = scaled_gap_series(t, 2000);
  REQUIRE(series.size() == 1999);
  CHECK(series[0].first == 2);

  // n=4: log(4) * (17/11 - 17/7).
  CHECK(series[2].second ==
        doctest::Approx(std::log(4.0) * (17.0 / 11.0 - 17.0 / 7.0)).epsilon(1e-12));
  CHECK(series[2].second == doctest::Approx(-1.2242600).epsilon(1e-6));

  // value / (p_n - p_{n+1}) recovers the key ratio.
  for (const auto& [n, value] : series) {
    const double denom = static_cast<double>(t.nth_prime(n)) -
                         static_cast<double>(t.nth_prime(n + 1));
    const double recovered = value / denom;
    CHECK(rel_dev(recovered, key_ratio(t, n)) <= 1e-14);
  }
}

TEST_CASE("gap-2 points cluster near -1 in the scaled series") {
  const PrimeTable& t = fixture_table();
  // At n ~ 1e4..2e4 the expansion sits near 0.41-0.43, so gap-2 values sit
  // near -0.82..-0.86; the pinned band is +-0.25 around -1.
  const auto series = scaled_gap_series(t, 20'000);
  std::size_t seen = 0;
  for (const auto& [n, value] : series) {
    if (n < 10'000 || t.gap(n) != 2) continue;
    ++seen;
    CHECK(value > -1.25);
    CHECK(value < -0.75);
  }
  CHECK(seen > 100);
}

TEST_CASE("diff matches the exact gap identity everywhere") {
  const PrimeTable& t = fixture_table();
  const auto points = build_series(t, 20'000);
  for (const SeriesPoint& pt : points) {
    const auto p = static_cast<long double>(t.nth_prime(pt.n));
    const auto q = static_cast<long double>(t.nth_prime(pt.n + 1));
    const auto sum = static_cast<long double>(t.prefix_sum(pt.n));
    const long double rhs = 1.0L - (q - p) * sum / (p * q);
    CHECK(rel_dev(pt.diff, rhs) <= 1e-12);
    CHECK(pt.diff < 1.0);
  }
}

TEST_CASE("gap-2 differences stay in (0.8, 1) from n = 1000 on") {
  const PrimeTable& t = fixture_table();
  const auto points = build_series(t, 20'000);
  for (const SeriesPoint& pt : points) {
    if (pt.n < 1000 || pt.gap != 2) continue;
    CHECK(pt.diff > 0.8);
    CHECK(pt.diff < 1.0);
  }
}

TEST_CASE("sign and loglog fields are consistent") {
  const auto points = build_series(fixture_table(), 5000);
  for (const SeriesPoint& pt : points) {
    if (pt.sign == Sign::positive) CHECK(pt.diff > 0.0);
    if (pt.sign == Sign::negative) CHECK(pt.diff < 0.0);
    CHECK(pt.loglog_y.has_value() == (pt.sign != Sign::zero));
    if (pt.loglog_y)
      CHECK(*pt.loglog_y == doctest::Approx(std::log(std::fabs(pt.diff))).epsilon(1e-12));
  }
}

TEST_CASE("group_curtains partitions the points") {
  const auto points = build_series(fixture_table(), 10'000);
  const auto groups = group_curtains(points);

  std::size_t total = 0;
  std::set<std::uint64_t> gaps_seen;
  for (const CurtainGroup& g : groups) {
    total += g.points.size();
    CHECK(gaps_seen.insert(g.gap).second);  // no gap in two groups
    CHECK(g.predicted_trough_log_n == static_cast<double>(g.gap) / 2.0);
    for (const SeriesPoint& pt : g.points) CHECK(pt.gap == g.gap);
  }
  CHECK(total == points.size());
  CHECK(group_curtains({}).empty());
}

TEST_CASE("two gaps give exactly two groups") {
  auto points = build_series(fixture_table(), 8);
  // n = 2..8 over primes 3,5,...,23: gaps {2, 4} only.
  const auto groups = group_curtains(points);
  CHECK(groups.size() == 2);
  CHECK(groups[0].gap == 2);
  CHECK(groups[0].predicted_trough_log_n == 1.0);
  CHECK(groups[1].gap == 4);
}

TEST_CASE("detect_trough side conditions") {
  const auto points = build_series(fixture_table(), 20'000);
  const auto groups = group_curtains(points);

  const CurtainGroup* gap6 = nullptr;
  for (const CurtainGroup& g : groups)
    if (g.gap == 6) gap6 = &g;
  REQUIRE(gap6 != nullptr);

  // The |diff| minimizer of the gap-6 curtain is its first point, n = 9
  // (the difference grows along the curtain from there).
  const auto detected = detect_trough(*gap6, 10);
  REQUIRE(detected.has_value());
  CHECK(*detected == doctest::Approx(std::log(9.0)).epsilon(1e-12));
  CHECK(std::fabs(*detected - 3.0) <= 1.0);

  // Demanding more members than exist turns the result absent.
  CHECK(!detect_trough(*gap6, gap6->points.size() + 1).has_value());

  CurtainGroup lonely;
  lonely.gap = 6;
  lonely.predicted_trough_log_n = 3.0;
  lonely.points.push_back(points.front());
  CHECK(!detect_trough(lonely, 10).has_value());
}

TEST_CASE("detect_trough needs members on both sides") {
  // All-above-center group: members exist but nothing below log n = 1.
  const auto points = build_series(fixture_table(), 4000);
  CurtainGroup fake;
  fake.gap = 2;
  fake.predicted_trough_log_n = 1.0;
  for (const SeriesPoint& pt : points)
    if (pt.gap == 2 && pt.n >= 100) fake.points.push_back(pt);
  REQUIRE(fake.points.size() >= 10);
  CHECK(!detect_trough(fake, 10).has_value());
}

TEST_CASE("extreme_stats") {
  const auto points = build_series(fixture_table(), 10'000);
  const ExtremeStats stats = extreme_stats(points);

  CHECK(stats.max_diff < 1.0);
  CHECK(stats.min_diff < 0.0);

  // max_scaled_negative is the largest gap/(2 log n); recompute directly.
  double expected = 0.0;
  const SeriesPoint* worst = nullptr;
  for (const SeriesPoint& pt : points) {
    const double v = static_cast<double>(pt.gap) / (2.0 * pt.log_n);
    if (v > expected) {
      expected = v;
      worst = &pt;
    }
  }
  CHECK(stats.max_scaled_negative == expected);

  // The most negative difference sits at the point maximizing gap/log n.
  REQUIRE(worst != nullptr);
  CHECK(stats.min_diff == doctest::Approx(worst->diff).epsilon(1e-15));

  const std::vector<SeriesPoint> single{points.front()};
  const ExtremeStats one = extreme_stats(single);
  CHECK(one.max_diff == one.min_diff);
  CHECK_THROWS_AS(extreme_stats({}), std::invalid_argument);
}

TEST_CASE("series input validation") {
  const PrimeTable& t = fixture_table();
  CHECK_THROWS_AS(build_series(t, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_series(t, t.count() + 5), std::out_of_range);
  CHECK_THROWS_AS(key_ratio(t, t.count()), std::out_of_range);
  CHECK_THROWS_AS(corrected_diff(t, 0), std::invalid_argument);
}
