#include "primecurtain/cramer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "primecurtain/int128.hpp"
#include "primecurtain/rng.hpp"

namespace primecurtain {

const char* to_string(CramerVariant variant) {
  return variant == CramerVariant::modified_odd ? "modified_odd" : "classic";
}

CramerVariant cramer_variant_from_string(const std::string& name) {
  if (name == "modified_odd") return CramerVariant::modified_odd;
  if (name == "classic") return CramerVariant::classic;
  throw std::invalid_argument("unknown Cramer variant: " + name);
}

CramerSequence generate(const CramerConfig& config) {
  if (config.limit < 5) throw std::invalid_argument("generate: limit must be >= 5");

  CramerSequence seq;
  seq.config = config;
  const IndexedRng rng{config.seed};

  if (config.variant == CramerVariant::modified_odd) {
    seq.values.push_back(3);
    for (std::uint64_t k = 5; k <= config.limit; k += 2) {
      const double p = std::min(1.0, 2.0 / std::log(static_cast<double>(k)));
      if (rng.uniform((k - 5) / 2) < p) seq.values.push_back(k);
    }
  } else {
    seq.values.push_back(2);
    for (std::uint64_t n = 3; n <= config.limit; ++n) {
      const double p = 1.0 / std::log(static_cast<double>(n));
      if (rng.uniform(n - 3) < p) seq.values.push_back(n);
    }
  }
  return seq;
}

namespace {

std::size_t count_below(const CramerSequence& seq, double x) {
  if (x > static_cast<double>(seq.config.limit))
    throw std::out_of_range("cramer: x exceeds the generated limit");
  if (x < 0.0) return 0;
  const auto bound = static_cast<std::uint64_t>(x);
  auto it = std::upper_bound(seq.values.begin(), seq.values.end(), bound);
  return static_cast<std::size_t>(it - seq.values.begin());
}

}  // namespace

double count_error(const CramerSequence& seq, double x, const QuadratureConfig& cfg) {
  const std::size_t count = count_below(seq, x);
  return static_cast<double>(count) - li(x, cfg);
}

double power_sum_error(const CramerSequence& seq, double alpha, double x,
                       const QuadratureConfig& cfg) {
  const std::size_t count = count_below(seq, x);
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double term = std::pow(static_cast<double>(seq.values[i]), alpha);
    const double t = term - comp;
    const double s = sum + t;
    comp = (s - sum) - t;
    sum = s;
  }
  return sum - weighted_integral(alpha, x, cfg);
}

double ratio_main_term(std::uint64_t n, const QuadratureConfig& cfg) {
  if (n < 3) throw std::invalid_argument("ratio_main_term: n must be >= 3");
  const double inv = li_inverse(static_cast<double>(n), cfg);
  const double integral = weighted_integral(1.0, inv, cfg);
  return std::log(static_cast<double>(n)) * integral / (inv * inv);
}

double model_key_ratio(const CramerSequence& seq, std::size_t n) {
  if (n < 1 || n + 1 > seq.values.size())
    throw std::out_of_range("model_key_ratio: need n+1 = " + std::to_string(n + 1) +
                            " values, have " + std::to_string(seq.values.size()));
  u128 sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += seq.values[i];
  const double vn = static_cast<double>(seq.values[n - 1]);
  const double vn1 = static_cast<double>(seq.values[n]);
  return std::log(static_cast<double>(n)) * to_double(sum) / (vn * vn1);
}

}  // namespace primecurtain
