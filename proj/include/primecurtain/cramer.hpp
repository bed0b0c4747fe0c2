#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "primecurtain/numerics.hpp"

namespace primecurtain {

// modified_odd: 3 is fixed; each odd k >= 5 joins with probability
// min(1, 2/log k), so consecutive differences stay even.  (2/log 5 and
// 2/log 7 exceed 1; those two candidates are always included.)
// classic: 2 is fixed; each integer n >= 3 joins with probability 1/log n.
enum class CramerVariant { modified_odd, classic };

const char* to_string(CramerVariant variant);
CramerVariant cramer_variant_from_string(const std::string& name);

struct CramerConfig {
  std::uint64_t limit = 0;  // largest candidate value; must be >= 5
  std::uint64_t seed = 0;
  CramerVariant variant = CramerVariant::modified_odd;
};

// One realization of the random prime model: values sorted ascending,
// fully determined by (seed, variant, limit).  Candidate k draws at stream
// index (k-5)/2 (modified_odd) resp. n-3 (classic).
struct CramerSequence {
  CramerConfig config;
  std::vector<std::uint64_t> values;
};

CramerSequence generate(const CramerConfig& config);

// #{p in values : p <= x} - li(x).  Throws std::out_of_range for x > limit.
double count_error(const CramerSequence& seq, double x, const QuadratureConfig& cfg = {});

// sum_{p<=x} p^alpha - int_2^x t^alpha/log t dt; the sum runs in ascending
// order with compensated accumulation.
double power_sum_error(const CramerSequence& seq, double alpha, double x,
                       const QuadratureConfig& cfg = {});

// log n / Li^{-1}(n)^2 * int_2^{Li^{-1}(n)} t/log t dt: the smooth
// prediction for the key ratio under the random model; tends to 1/2.
// Requires n >= 3.
double ratio_main_term(std::uint64_t n, const QuadratureConfig& cfg = {});

// log n * (v_1 + ... + v_n) / (v_n v_{n+1}) over the realization; needs
// n + 1 values.
double model_key_ratio(const CramerSequence& seq, std::size_t n);

}  // namespace primecurtain
