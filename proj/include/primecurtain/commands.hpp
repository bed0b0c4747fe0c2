#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "primecurtain/cramer.hpp"

namespace primecurtain::commands {

// CSV-emitting commands behind the CLI.  Every command writes the data file
// atomically plus a `<out>.manifest.json` sidecar; reruns with the same
// parameters and build are byte-identical.

enum class FigureKind { motivation, convergence, gaps, hyperbolas, shifted, loglog };

FigureKind figure_kind_from_string(const std::string& name);
const char* to_string(FigureKind kind);

// Ratio-series figures for n = 2..limit_n; limit_n >= 10.
void figure(FigureKind kind, std::size_t limit_n, const std::filesystem::path& out);

enum class CramerAction { simulate, error_sweep, figure };

CramerAction cramer_action_from_string(const std::string& name);

struct CramerOptions {
  std::uint64_t limit = 100000;
  std::uint64_t seed = 1;
  unsigned seeds = 20;            // error-sweep runs seeds 1..seeds
  double alpha = 0.0;
  std::vector<double> checkpoints;  // default {1e3, 1e4, 1e5} capped at limit
  CramerVariant variant = CramerVariant::modified_odd;
  bool variant_given = false;     // error-sweep defaults to classic otherwise
};

void cramer(CramerAction action, const CramerOptions& options,
            const std::filesystem::path& out);

enum class GaussianAction { enumerate, walk, sectors, fourth, model_walk };

GaussianAction gaussian_action_from_string(const std::string& name);

struct GaussianOptions {
  std::uint64_t max_norm = 1000000;
  double exponent = 4.0;
  unsigned sectors_k = 8;
  unsigned seeds = 20;              // model-walk runs seeds 1..seeds
  std::vector<double> checkpoints;  // default: decades up to max_norm
};

void gaussian(GaussianAction action, const GaussianOptions& options,
              const std::filesystem::path& out);

}  // namespace primecurtain::commands
