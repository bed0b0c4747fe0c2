#include "primecurtain/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "primecurtain/commands.hpp"
#include "primecurtain/cramer.hpp"
#include "primecurtain/csv.hpp"
#include "primecurtain/gaussian.hpp"
#include "primecurtain/numerics.hpp"
#include "primecurtain/rng.hpp"
#include "primecurtain/series.hpp"

namespace primecurtain::acceptance {

namespace {

constexpr std::size_t kMaxIndex = 1'000'000;
constexpr unsigned kSeeds = 20;
constexpr unsigned kSeedsRequired = 18;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::vector<CriterionResult> series_criteria(const PrimeTable& table, double build_seconds) {
  std::vector<CriterionResult> results;

  {  // 1: |key_ratio(n) - expansion_value(n)| <= 0.75/log n at n = 1e4, 1e5, 1e6.
    Timer t;
    bool ok = true;
    std::string detail;
    for (std::size_t n : {std::size_t{10'000}, std::size_t{100'000}, std::size_t{1'000'000}}) {
      const double gap = std::fabs(key_ratio(table, n) - expansion_value(n));
      const double tol = 0.75 / std::log(static_cast<double>(n));
      ok = ok && gap <= tol;
      detail += "n=1e" + std::to_string(static_cast<int>(std::log10(double(n)))) +
                ": |dev|=" + fmt(gap) + " tol=" + fmt(tol) + "; ";
    }
    const double secs = t.seconds() + build_seconds;
    const bool in_time = secs < 60.0;
    detail += in_time ? "runtime ok" : "runtime over 60 s";
    results.push_back({1, "key-ratio expansion", ok && in_time, detail, secs});
  }

  {  // 2: key_ratio(n) in [0.35, 0.505] for all 1e3 <= n <= 1e6.
    Timer t;
    double lo = 1.0, hi = 0.0;
    for (std::size_t n = 1'000; n <= kMaxIndex; ++n) {
      const double r = key_ratio(table, n);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const bool ok = lo >= 0.35 && hi <= 0.505;
    results.push_back({2, "key-ratio band",
                       ok, "min=" + fmt(lo) + " max=" + fmt(hi) + " band=[0.35,0.505]",
                       t.seconds()});
  }

  {  // 3: diff(n) = 1 - gap*S_n/(p_n p_{n+1}) to 1e-12 relative, 1e6 random n.
    Timer t;
    const IndexedRng rng{0x5eed5eed5eedULL};
    long double worst = 0.0L;
    for (std::size_t i = 0; i < 1'000'000; ++i) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.bits(i) % (kMaxIndex - 1));
      const long double lhs = corrected_diff(table, n);
      const auto p = static_cast<long double>(table.primes[n - 1]);
      const auto q = static_cast<long double>(table.primes[n]);
      const auto sum = static_cast<long double>(table.prefix_sums[n - 1]);
      const long double rhs = 1.0L - (q - p) * sum / (p * q);
      const long double scale =
          std::max({1.0L, std::fabs(lhs), std::fabs(rhs)});
      worst = std::max(worst, std::fabs(lhs - rhs) / scale);
    }
    const bool ok = worst <= 1e-12L;
    results.push_back({3, "gap identity", ok,
                       "worst relative deviation=" + fmt(static_cast<double>(worst)) +
                           " tol=1e-12",
                       t.seconds()});
  }

  {  // 4: detect_trough within +-1.0 of g/2 for g = 6, 8, 10, 12, 14.
    Timer t;
    const std::vector<SeriesPoint> points = build_series(table, kMaxIndex);
    const std::vector<CurtainGroup> groups = group_curtains(points);
    bool ok = true;
    std::string detail;
    for (std::uint64_t g : {6, 8, 10, 12, 14}) {
      const auto it = std::find_if(groups.begin(), groups.end(),
                                   [g](const CurtainGroup& c) { return c.gap == g; });
      std::string piece = "g=" + std::to_string(g) + ": ";
      if (it == groups.end()) {
        ok = false;
        piece += "no data";
      } else if (const auto det = detect_trough(*it, 10); !det) {
        ok = false;
        piece += "absent";
      } else {
        const double dev = std::fabs(*det - static_cast<double>(g) / 2.0);
        ok = ok && dev <= 1.0;
        piece += "detected=" + fmt(*det) + " |dev|=" + fmt(dev) + (dev <= 1.0 ? " ok" : " off");
      }
      detail += piece + "; ";
    }
    results.push_back({4, "trough locations", ok, detail, t.seconds()});
  }

  {  // 5: every diff < 1, and the maximum diff over n <= 1e6 exceeds 0.95.
    Timer t;
    double max_diff = -1e300;
    std::size_t argmax = 0;
    for (std::size_t n = 2; n <= kMaxIndex; ++n) {
      const double d = corrected_diff(table, n);
      if (d > max_diff) {
        max_diff = d;
        argmax = n;
      }
    }
    const bool below_one = max_diff < 1.0;
    const bool above_threshold = max_diff > 0.95;
    results.push_back({5, "extreme diffs", below_one && above_threshold,
                       "max diff=" + fmt(max_diff) + " at n=" + std::to_string(argmax) +
                           " (need < 1 and > 0.95)",
                       t.seconds()});
  }

  return results;
}

std::vector<CriterionResult> series_criteria() {
  Timer t;
  const PrimeTable table = build_prime_table(sieve_limit_for_count(kMaxIndex + 1));
  return series_criteria(table, t.seconds());
}

std::vector<CriterionResult> cramer_criteria() {
  std::vector<CriterionResult> results;
  const double x = 1e5;

  std::vector<CramerSequence> sequences;
  {  // 6: classic model, |count - li(x)| <= x^0.6 for >= 18 of 20 seeds.
    Timer t;
    unsigned passed = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      sequences.push_back(generate({100'000, seed, CramerVariant::classic}));
      const double err = std::fabs(count_error(sequences.back(), x));
      worst = std::max(worst, err);
      if (err <= std::pow(x, 0.6)) ++passed;
    }
    const double secs = t.seconds();
    const bool ok = passed >= kSeedsRequired && secs < 30.0;
    results.push_back({6, "model count error", ok,
                       std::to_string(passed) + "/20 seeds within x^0.6=" +
                           fmt(std::pow(x, 0.6)) + ", worst=" + fmt(worst) +
                           (secs < 30.0 ? ", runtime ok" : ", runtime over 30 s"),
                       secs});
  }

  {  // 7: alpha=1 power-sum error <= x^1.6 for >= 18 seeds; fitted exponent
     // of the per-checkpoint mean |error| <= 1.75.
    Timer t;
    unsigned passed = 0;
    const std::vector<double> checkpoints{1e3, 1e4, 1e5};
    std::vector<double> mean_abs(checkpoints.size(), 0.0);
    for (const CramerSequence& seq : sequences) {
      for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        const double err = power_sum_error(seq, 1.0, checkpoints[c]);
        mean_abs[c] += std::fabs(err) / kSeeds;
        if (checkpoints[c] == x && std::fabs(err) <= std::pow(x, 1.6)) ++passed;
      }
    }
    std::vector<std::pair<double, double>> pts;
    for (std::size_t c = 0; c < checkpoints.size(); ++c)
      pts.emplace_back(checkpoints[c], mean_abs[c]);
    const double slope = fit_exponent(pts).slope;
    const bool ok = passed >= kSeedsRequired && slope <= 1.75;
    results.push_back({7, "model power-sum error", ok,
                       std::to_string(passed) + "/20 seeds within x^1.6, mean-|error| slope=" +
                           fmt(slope) + " (<= 1.75)",
                       t.seconds()});
  }

  {  // 8: |model_key_ratio(seq, 1e4) - ratio_main_term(1e4)| <= 1e4^-0.4
     // for >= 18 of 20 seeds.
    Timer t;
    const double main_term = ratio_main_term(10'000);
    const double tol = std::pow(1e4, -0.4);
    unsigned passed = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      const CramerSequence seq = generate({130'000, seed, CramerVariant::classic});
      const double dev = std::fabs(model_key_ratio(seq, 10'000) - main_term);
      worst = std::max(worst, dev);
      if (dev <= tol) ++passed;
    }
    results.push_back({8, "key-ratio main term", passed >= kSeedsRequired,
                       std::to_string(passed) + "/20 seeds within " + fmt(tol) +
                           " of main term " + fmt(main_term) + ", worst=" + fmt(worst),
                       t.seconds()});
  }

  return results;
}

std::vector<CriterionResult> gaussian_criteria() {
  std::vector<CriterionResult> results;
  constexpr std::uint64_t kNorm = 1'000'000;

  Timer build_timer;
  const GaussianPrimeSet set = enumerate_gaussian_primes(kNorm);
  const double build_secs = build_timer.seconds();

  {  // 9: 16 primes at max_norm 10; exact class-count identity at 1e6.
    Timer t;
    const GaussianPrimeSet small = enumerate_gaussian_primes(10);
    const bool small_ok = small.primes.size() == 16;

    const PrimeTable table = build_prime_table(kNorm);
    std::uint64_t split = 0, inert = 0;
    for (std::uint64_t p : table.primes) {
      if (p % 4 == 1) ++split;
      if (p % 4 == 3 && p <= kNorm / p) ++inert;
    }
    const std::uint64_t expected = 4 + 8 * split + 4 * inert;
    const bool identity_ok = set.primes.size() == expected;
    const double secs = t.seconds() + build_secs;
    const bool in_time = secs < 60.0;
    results.push_back({9, "gaussian enumeration", small_ok && identity_ok && in_time,
                       "count(10)=" + std::to_string(small.primes.size()) +
                           " (=16), count(1e6)=" + std::to_string(set.primes.size()) +
                           " expected=" + std::to_string(expected) +
                           (in_time ? ", runtime ok" : ", runtime over 60 s"),
                       secs});
  }

  {  // 10: sum_imag identically 0; |S(1e6,4)|/count <= 0.05; |S| exponent <= 0.75.
    Timer t;
    bool imag_ok = true;
    std::vector<std::pair<double, double>> pts;
    double final_ratio = 0.0;
    std::string walk_values;
    for (double x : {1e3, 1e4, 1e5, 1e6}) {
      const WalkCheckpoint cp = exp_sum(set, 4.0, x);
      imag_ok = imag_ok && cp.sum_imag == 0.0;
      pts.emplace_back(x, std::fabs(cp.sum_real));
      if (x == 1e6) final_ratio = std::fabs(cp.sum_real) / static_cast<double>(cp.count);
      walk_values += "|S(" + fmt(x) + ")|=" + fmt(std::fabs(cp.sum_real)) + " ";
    }
    const double slope = fit_exponent(pts).slope;
    const bool ok = imag_ok && final_ratio <= 0.05 && slope <= 0.75;
    results.push_back({10, "exp-sum cancellation", ok,
                       walk_values + "; |S|/count=" + fmt(final_ratio) +
                           " (<= 0.05), slope=" + fmt(slope) + " (<= 0.75)",
                       t.seconds()});
  }

  {  // 11: exact fourth-power sums and the norm-grouped regrouping identity.
    Timer t;
    const bool small_ok = fourth_power_sum(set, 2) == -16 &&
                          fourth_power_sum(set, 5) == -72 && fourth_power_sum(set, 9) == 252;

    // Regrouped route: per-norm exact sums, then a second pass across norms.
    std::map<std::uint64_t, i128> by_norm;
    for (const GaussianPrime& gp : set.primes) {
      if (gp.norm > 10'000) break;
      const i128 a = gp.re, b = gp.im;
      const i128 a2 = a * a, b2 = b * b;
      by_norm[gp.norm] += a2 * a2 - 6 * a2 * b2 + b2 * b2;
    }
    i128 regrouped = 0;
    for (const auto& [norm, value] : by_norm) regrouped += value;
    const bool regroup_ok = regrouped == fourth_power_sum(set, 10'000);
    results.push_back({11, "fourth-power sums", small_ok && regroup_ok,
                       std::string("exact values ") + (small_ok ? "ok" : "WRONG") +
                           ", regroup at 1e4 " + (regroup_ok ? "exact" : "MISMATCH") +
                           " (sum=" + to_string(regrouped) + ")",
                       t.seconds()});
  }

  {  // 12: the 8 half-quadrants agree exactly off-boundary; 16 sub-sectors of
     // [0, pi/4) within 5% of their mean.
    Timer t;
    const double pi = std::numbers::pi;
    std::uint64_t quadrant_counts[8] = {};
    for (const GaussianPrime& gp : set.primes) {
      const bool boundary = gp.re == 0 || gp.im == 0 || gp.re == gp.im || gp.re == -gp.im;
      if (boundary) continue;
      const int k = std::min(7, static_cast<int>(gp.angle / (pi / 4.0)));
      ++quadrant_counts[k];
    }
    const bool octants_ok =
        std::all_of(quadrant_counts, quadrant_counts + 8,
                    [&](std::uint64_t c) { return c == quadrant_counts[0]; });

    double mean = 0.0;
    std::uint64_t cells[16];
    for (int k = 0; k < 16; ++k) {
      cells[k] = sector_count(set, static_cast<double>(kNorm), k * pi / 64.0,
                              (k + 1) * pi / 64.0);
      mean += static_cast<double>(cells[k]) / 16.0;
    }
    double worst_rel = 0.0;
    for (const std::uint64_t c : cells)
      worst_rel = std::max(worst_rel, std::fabs(static_cast<double>(c) - mean) / mean);
    const bool cells_ok = worst_rel <= 0.05;
    results.push_back({12, "sector equidistribution", octants_ok && cells_ok,
                       std::string("octants ") + (octants_ok ? "equal" : "UNEQUAL") +
                           " (n=" + std::to_string(quadrant_counts[0]) +
                           "), 16-cell worst deviation=" + fmt(worst_rel) + " (<= 0.05)",
                       t.seconds()});
  }

  {  // 13: model walk: X(2) = -8 always; |X(1e5)| <= 8 x^0.6 for >= 18 seeds.
    Timer t;
    const double x = 1e5;
    const double bound = 8.0 * std::pow(x, 0.6);
    unsigned passed = 0;
    bool start_ok = true;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      const GaussianModelSample sample = generate_model(seed, static_cast<std::uint64_t>(x));
      start_ok = start_ok && model_walk(sample, 2.0) == -8.0;
      const double walk = std::fabs(model_walk(sample, x));
      worst = std::max(worst, walk);
      if (walk <= bound) ++passed;
    }
    results.push_back({13, "random gaussian walk", start_ok && passed >= kSeedsRequired,
                       std::string("X(2)=-8 ") + (start_ok ? "all seeds" : "VIOLATED") + ", " +
                           std::to_string(passed) + "/20 within 8x^0.6=" + fmt(bound) +
                           ", worst=" + fmt(worst),
                       t.seconds()});
  }

  return results;
}

std::vector<CriterionResult> numerics_criteria() {
  std::vector<CriterionResult> results;
  Timer t;

  // Round trip on a geometric grid 0..1e5.
  bool round_ok = true;
  double worst_round = 0.0;
  std::vector<double> grid{0.0};
  for (double y = 1.0; y <= 1e5; y *= std::sqrt(10.0)) grid.push_back(y);
  grid.push_back(1e5);
  for (double y : grid) {
    const double err = std::fabs(li(li_inverse(y)) - y);
    const double rel = err / std::max(1.0, y);
    worst_round = std::max(worst_round, rel);
    round_ok = round_ok && rel <= 1e-9;
  }

  // Exact power laws recovered to 1e-9.
  std::vector<std::pair<double, double>> pow_pts, scaled_pts;
  for (double x : {10.0, 100.0, 1000.0}) {
    pow_pts.emplace_back(x, std::sqrt(x));
    scaled_pts.emplace_back(x, 7.25 * std::sqrt(x));
  }
  const double s1 = fit_exponent(pow_pts).slope;
  const double s2 = fit_exponent(scaled_pts).slope;
  const bool fit_ok = std::fabs(s1 - 0.5) <= 1e-9 && std::fabs(s2 - 0.5) <= 1e-9;

  // Discrete sum vs integral at alpha = 1: |error| <= 2x/log x.
  bool lemma_ok = true;
  std::string lemma_detail;
  for (double x : {1e3, 1e4, 1e5}) {
    const SumVsIntegral rec = sum_vs_integral(1.0, x);
    const double bound = 2.0 * x / std::log(x);
    lemma_ok = lemma_ok && std::fabs(rec.error) <= bound;
    lemma_detail += "x=" + fmt(x) + ": err=" + fmt(rec.error) + "/" + fmt(bound) + " ";
  }

  results.push_back({14, "numerics", round_ok && fit_ok && lemma_ok,
                     "round-trip worst rel=" + fmt(worst_round) +
                         " (<= 1e-9), power-law slopes " + fmt(s1) + "/" + fmt(s2) +
                         ", sum-vs-integral " + lemma_detail,
                     t.seconds()});
  return results;
}

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CriterionResult> determinism_criteria(double elapsed_before) {
  std::vector<CriterionResult> results;
  Timer t;

  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "primecurtain-verify";
  std::filesystem::create_directories(dir);

  commands::CramerOptions copt;
  copt.limit = 20'000;
  copt.seed = 42;
  commands::cramer(commands::CramerAction::simulate, copt, dir / "sim_a.csv");
  commands::cramer(commands::CramerAction::simulate, copt, dir / "sim_b.csv");
  const std::string sim_a = read_file(dir / "sim_a.csv");
  const bool cramer_ok = !sim_a.empty() && sim_a == read_file(dir / "sim_b.csv");

  commands::GaussianOptions gopt;
  gopt.max_norm = 10'000;
  gopt.seeds = 3;
  commands::gaussian(commands::GaussianAction::model_walk, gopt, dir / "walk_a.csv");
  commands::gaussian(commands::GaussianAction::model_walk, gopt, dir / "walk_b.csv");
  const std::string walk_a = read_file(dir / "walk_a.csv");
  const bool gaussian_ok = !walk_a.empty() && walk_a == read_file(dir / "walk_b.csv");

  std::error_code ec;
  std::filesystem::remove_all(dir, ec);

  const double total = elapsed_before + t.seconds();
  const bool in_time = total < 600.0;
  results.push_back({15, "determinism & budget", cramer_ok && gaussian_ok && in_time,
                     std::string("cramer simulate rerun ") +
                         (cramer_ok ? "byte-identical" : "DIFFERS") + ", model-walk rerun " +
                         (gaussian_ok ? "byte-identical" : "DIFFERS") + ", total " +
                         fmt(total) + " s (< 600)",
                     t.seconds()});
  return results;
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
  Timer t;
  std::vector<CriterionResult> results;
  const auto append = [&results](std::vector<CriterionResult> more) {
    for (auto& r : more) results.push_back(std::move(r));
  };

  if (suite == "series") {
    append(series_criteria());
  } else if (suite == "cramer") {
    append(cramer_criteria());
  } else if (suite == "gaussian") {
    append(gaussian_criteria());
  } else if (suite == "all") {
    append(series_criteria());
    append(cramer_criteria());
    append(gaussian_criteria());
    append(numerics_criteria());
    append(determinism_criteria(t.seconds()));
  } else {
    throw std::invalid_argument("unknown suite: " + suite +
                                " (expected series, cramer, gaussian, or all)");
  }
  return results;
}

int report(const std::vector<CriterionResult>& results, std::ostream& os) {
  bool all_pass = true;
  for (const CriterionResult& r : results) {
    all_pass = all_pass && r.pass;
    char line[32];
    std::snprintf(line, sizeof(line), "[%2d] %s ", r.id, r.pass ? "PASS" : "FAIL");
    os << line << r.name << ": " << r.detail << " (" << fmt(r.seconds) << " s)\n";
  }
  os << (all_pass ? "all criteria passed\n" : "CRITERIA FAILED\n");
  return all_pass ? 0 : 1;
}

}  // namespace primecurtain::acceptance
