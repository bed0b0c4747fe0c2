#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace primecurtain {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_subdivisions = 1'000'000;
};

// An iteration stopped before reaching its tolerance; `achieved` is the
// error estimate it got to.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

// li(x) = int_2^x dt/log t by adaptive Gauss-Kronrod quadrature.
// li(2) = 0; throws std::domain_error for x < 2.
double li(double x, const QuadratureConfig& cfg = {});

// The x >= 2 with |li(x) - y| <= 1e-9 * max(1, y): Newton steps with
// derivative 1/log x from the seed max(2, y log(max(y,3))), kept inside a
// bracketing interval with bisection as the fallback.  Throws
// std::domain_error for y < 0.
double li_inverse(double y, const QuadratureConfig& cfg = {});

// int_2^x t^alpha / log t dt for alpha >= 0.  weighted_integral(0, x, cfg)
// and li(x, cfg) share one code path and are bit-identical.
double weighted_integral(double alpha, double x, const QuadratureConfig& cfg = {});

struct SumVsIntegral {
  double sum;       // sum_{3<=n<=x} n^alpha / log n (compensated accumulation)
  double integral;  // int_2^x t^alpha / log t dt
  double error;     // sum - integral
};

// Discrete sum against its integral counterpart; x >= 3.
SumVsIntegral sum_vs_integral(double alpha, double x, const QuadratureConfig& cfg = {});

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points_used = 0;
};

// Ordinary least squares on (log x, log y).  Points with y = 0 are dropped;
// fewer than two usable points is an invalid_argument.
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& points);

}  // namespace primecurtain
