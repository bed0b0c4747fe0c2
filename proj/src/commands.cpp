#include "primecurtain/commands.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primecurtain/csv.hpp"
#include "primecurtain/gaussian.hpp"
#include "primecurtain/series.hpp"

namespace primecurtain::commands {

namespace {

const char* to_string(Sign sign) {
  switch (sign) {
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    default: return "zero";
  }
}

Sign sign_of(double diff) {
  return diff > 0 ? Sign::positive : (diff < 0 ? Sign::negative : Sign::zero);
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += format_double(values[i]);
  }
  return s;
}

std::vector<double> decade_checkpoints(std::uint64_t max_norm) {
  std::vector<double> v;
  for (double x = 10.0; x < static_cast<double>(max_norm); x *= 10.0) v.push_back(x);
  v.push_back(static_cast<double>(max_norm));
  return v;
}

}  // namespace

FigureKind figure_kind_from_string(const std::string& name) {
  if (name == "motivation") return FigureKind::motivation;
  if (name == "convergence") return FigureKind::convergence;
  if (name == "gaps") return FigureKind::gaps;
  if (name == "hyperbolas") return FigureKind::hyperbolas;
  if (name == "shifted") return FigureKind::shifted;
  if (name == "loglog") return FigureKind::loglog;
  throw std::invalid_argument("unknown figure kind: " + name);
}

const char* to_string(FigureKind kind) {
  switch (kind) {
    case FigureKind::motivation: return "motivation";
    case FigureKind::convergence: return "convergence";
    case FigureKind::gaps: return "gaps";
    case FigureKind::hyperbolas: return "hyperbolas";
    case FigureKind::shifted: return "shifted";
    default: return "loglog";
  }
}

void figure(FigureKind kind, std::size_t limit_n, const std::filesystem::path& out) {
  if (limit_n < 10) throw std::invalid_argument("figure: limit_n must be >= 10");
  const PrimeTable table = build_prime_table(sieve_limit_for_count(limit_n + 1));

  const std::vector<std::vector<std::string>> headers = {
      {"n", "log10_n", "abs_diff", "log10_abs_diff", "sign"},
      {"n", "key_ratio", "expansion_value"},
      {"n", "log_n", "scaled_gap_value", "gap"},
      {"n", "log_n", "uncorrected_diff", "gap"},
      {"n", "log_n", "corrected_diff", "gap", "sign"},
      {"n", "log10_n", "log10_abs_corrected_diff", "sign"}};
  CsvFile csv(headers[static_cast<int>(kind)]);

  const std::vector<std::pair<std::uint64_t, double>> scaled =
      kind == FigureKind::gaps ? scaled_gap_series(table, limit_n)
                               : std::vector<std::pair<std::uint64_t, double>>{};

  for (std::size_t n = 2; n <= limit_n; ++n) {
    const std::string n_str = std::to_string(n);
    const double nd = static_cast<double>(n);
    switch (kind) {
      case FigureKind::motivation: {
        const double diff = uncorrected_diff(table, n);
        csv.add_row({n_str, format_double(std::log10(nd)), format_double(std::fabs(diff)),
                     format_double(std::log10(std::fabs(diff))), to_string(sign_of(diff))});
        break;
      }
      case FigureKind::convergence: {
        const std::string expansion = n >= 3 ? format_double(expansion_value(n)) : "";
        csv.add_row({n_str, format_double(key_ratio(table, n)), expansion});
        break;
      }
      case FigureKind::gaps: {
        csv.add_row({n_str, format_double(std::log(nd)), format_double(scaled[n - 2].second),
                     std::to_string(table.gap(n))});
        break;
      }
      case FigureKind::hyperbolas: {
        csv.add_row({n_str, format_double(std::log(nd)),
                     format_double(uncorrected_diff(table, n)), std::to_string(table.gap(n))});
        break;
      }
      case FigureKind::shifted: {
        const double diff = corrected_diff(table, n);
        csv.add_row({n_str, format_double(std::log(nd)), format_double(diff),
                     std::to_string(table.gap(n)), to_string(sign_of(diff))});
        break;
      }
      case FigureKind::loglog: {
        const double diff = corrected_diff(table, n);
        if (diff == 0.0) break;  // log of zero: row skipped
        csv.add_row({n_str, format_double(std::log10(nd)),
                     format_double(std::log10(std::fabs(diff))), to_string(sign_of(diff))});
        break;
      }
    }
  }

  csv.write(out);
  RunManifest manifest;
  manifest.command = "figure";
  manifest.parameters = {{"kind", to_string(kind)}, {"limit_n", std::to_string(limit_n)}};
  manifest.output_path = out.string();
  write_manifest(manifest);
}

CramerAction cramer_action_from_string(const std::string& name) {
  if (name == "simulate") return CramerAction::simulate;
  if (name == "error-sweep") return CramerAction::error_sweep;
  if (name == "figure") return CramerAction::figure;
  throw std::invalid_argument("unknown cramer action: " + name);
}

void cramer(CramerAction action, const CramerOptions& options,
            const std::filesystem::path& out) {
  if (options.seeds < 1) throw std::invalid_argument("cramer: seeds must be >= 1");

  std::vector<double> checkpoints = options.checkpoints;
  if (checkpoints.empty()) {
    for (double x : {1e3, 1e4, 1e5})
      if (x <= static_cast<double>(options.limit)) checkpoints.push_back(x);
    if (checkpoints.empty()) checkpoints.push_back(static_cast<double>(options.limit));
  }

  RunManifest manifest;
  manifest.output_path = out.string();
  manifest.parameters["limit"] = std::to_string(options.limit);

  switch (action) {
    case CramerAction::simulate: {
      const CramerSequence seq =
          generate({options.limit, options.seed, options.variant});
      CsvFile csv({"n", "value"});
      for (std::size_t i = 0; i < seq.values.size(); ++i)
        csv.add_row({std::to_string(i + 1), std::to_string(seq.values[i])});
      csv.write(out);
      manifest.command = "cramer simulate";
      manifest.seed = options.seed;
      manifest.parameters["variant"] = primecurtain::to_string(options.variant);
      break;
    }
    case CramerAction::error_sweep: {
      // Verification of the power-sum error bound runs on the classic model
      // unless a variant was asked for explicitly.
      const CramerVariant variant =
          options.variant_given ? options.variant : CramerVariant::classic;
      CsvFile csv({"seed", "x", "alpha", "error"});
      for (std::uint64_t seed = 1; seed <= options.seeds; ++seed) {
        const CramerSequence seq = generate({options.limit, seed, variant});
        for (double x : checkpoints)
          csv.add_row({std::to_string(seed), format_double(x), format_double(options.alpha),
                       format_double(power_sum_error(seq, options.alpha, x))});
      }
      csv.write(out);
      manifest.command = "cramer error-sweep";
      manifest.parameters["seeds"] = std::to_string(options.seeds);
      manifest.parameters["alpha"] = format_double(options.alpha);
      manifest.parameters["checkpoints"] = join(checkpoints);
      manifest.parameters["variant"] = primecurtain::to_string(variant);
      break;
    }
    case CramerAction::figure: {
      const CramerSequence seq =
          generate({options.limit, options.seed, options.variant});
      if (seq.values.size() < 3)
        throw std::invalid_argument("cramer figure: realization too short");
      CsvFile csv({"n", "log_n", "key_ratio"});
      for (std::size_t n = 2; n + 1 <= seq.values.size(); ++n)
        csv.add_row({std::to_string(n), format_double(std::log(static_cast<double>(n))),
                     format_double(model_key_ratio(seq, n))});
      csv.write(out);
      manifest.command = "cramer figure";
      manifest.seed = options.seed;
      manifest.parameters["variant"] = primecurtain::to_string(options.variant);
      break;
    }
  }
  write_manifest(manifest);
}

GaussianAction gaussian_action_from_string(const std::string& name) {
  if (name == "enumerate") return GaussianAction::enumerate;
  if (name == "walk") return GaussianAction::walk;
  if (name == "sectors") return GaussianAction::sectors;
  if (name == "fourth") return GaussianAction::fourth;
  if (name == "model-walk") return GaussianAction::model_walk;
  throw std::invalid_argument("unknown gaussian action: " + name);
}

void gaussian(GaussianAction action, const GaussianOptions& options,
              const std::filesystem::path& out) {
  std::vector<double> checkpoints =
      options.checkpoints.empty() ? decade_checkpoints(options.max_norm) : options.checkpoints;

  RunManifest manifest;
  manifest.output_path = out.string();
  manifest.parameters["max_norm"] = std::to_string(options.max_norm);

  switch (action) {
    case GaussianAction::enumerate: {
      const GaussianPrimeSet set = enumerate_gaussian_primes(options.max_norm);
      CsvFile csv({"re", "im", "norm", "angle"});
      for (const GaussianPrime& gp : set.primes)
        csv.add_row({std::to_string(gp.re), std::to_string(gp.im), std::to_string(gp.norm),
                     format_double(gp.angle)});
      csv.write(out);
      manifest.command = "gaussian enumerate";
      break;
    }
    case GaussianAction::walk: {
      const GaussianPrimeSet set = enumerate_gaussian_primes(options.max_norm);
      CsvFile csv({"x", "sum_real", "count", "x_pow_06", "x_over_logx"});
      for (double x : checkpoints) {
        const WalkCheckpoint cp = exp_sum(set, options.exponent, x);
        csv.add_row({format_double(x), format_double(cp.sum_real), std::to_string(cp.count),
                     format_double(std::pow(x, 0.6)), format_double(x / std::log(x))});
      }
      csv.write(out);
      manifest.command = "gaussian walk";
      manifest.parameters["exponent"] = format_double(options.exponent);
      manifest.parameters["checkpoints"] = join(checkpoints);
      break;
    }
    case GaussianAction::sectors: {
      if (options.sectors_k < 1) throw std::invalid_argument("gaussian sectors: need k >= 1");
      const GaussianPrimeSet set = enumerate_gaussian_primes(options.max_norm);
      const double two_pi = 2.0 * std::numbers::pi;
      const double width = two_pi / options.sectors_k;
      CsvFile csv({"k", "lo", "hi", "count"});
      for (unsigned k = 0; k < options.sectors_k; ++k) {
        const double lo = k * width;
        const double hi = (k + 1 == options.sectors_k) ? two_pi : (k + 1) * width;
        csv.add_row({std::to_string(k), format_double(lo), format_double(hi),
                     std::to_string(sector_count(set, static_cast<double>(options.max_norm),
                                                 lo, hi))});
      }
      csv.write(out);
      manifest.command = "gaussian sectors";
      manifest.parameters["sectors_k"] = std::to_string(options.sectors_k);
      break;
    }
    case GaussianAction::fourth: {
      const GaussianPrimeSet set = enumerate_gaussian_primes(options.max_norm);
      CsvFile csv({"x", "sum"});
      for (double x : checkpoints)
        csv.add_row({format_double(x), primecurtain::to_string(fourth_power_sum(set, x))});
      csv.write(out);
      manifest.command = "gaussian fourth";
      manifest.parameters["checkpoints"] = join(checkpoints);
      break;
    }
    case GaussianAction::model_walk: {
      if (options.seeds < 1) throw std::invalid_argument("gaussian model-walk: seeds >= 1");
      CsvFile csv({"seed", "x", "X"});
      for (std::uint64_t seed = 1; seed <= options.seeds; ++seed) {
        const GaussianModelSample sample = generate_model(seed, options.max_norm);
        for (double x : checkpoints)
          csv.add_row({std::to_string(seed), format_double(x),
                       format_double(model_walk(sample, x))});
      }
      csv.write(out);
      manifest.command = "gaussian model-walk";
      manifest.parameters["seeds"] = std::to_string(options.seeds);
      manifest.parameters["checkpoints"] = join(checkpoints);
      break;
    }
  }
  write_manifest(manifest);
}

}  // namespace primecurtain::commands
