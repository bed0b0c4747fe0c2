#include "primecurtain/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>

namespace primecurtain {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 nodes).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;  // Kronrod estimate
  double err;    // |Kronrod - Gauss|
};

template <typename F>
Panel gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double gauss = fc * kWg[3];
  double kronrod = fc * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += sum * kWgk[i];
    if (i % 2 == 1) gauss += sum * kWg[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::fabs(kronrod - gauss)};
}

// Globally adaptive bisection: split the worst panel until the summed error
// estimate meets max(abs_tol, rel_tol * |I|).
template <typename F>
double adaptive_quadrature(const F& f, double a, double b,
                           const QuadratureConfig& cfg, const char* name) {
  if (b <= a) return 0.0;

  std::deque<Panel> panels{gk15(f, a, b)};
  double total = panels.front().value;
  double err = panels.front().err;
  for (std::size_t splits = 0;; ++splits) {
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
    if (err <= target) return total;
    if (splits >= cfg.max_subdivisions)
      throw ConvergenceError(std::string(name) + ": subdivision limit reached", err);

    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& l, const Panel& r) { return l.err < r.err; });
    const double mid = 0.5 * (worst->a + worst->b);
    if (mid <= worst->a || mid >= worst->b)
      throw ConvergenceError(std::string(name) + ": interval exhausted", err);
    const Panel left = gk15(f, worst->a, mid);
    const Panel right = gk15(f, mid, worst->b);
    total += left.value + right.value - worst->value;
    err += left.err + right.err - worst->err;
    *worst = left;
    panels.push_back(right);
  }
}

double inverse_log(double t) { return 1.0 / std::log(t); }

}  // namespace

double weighted_integral(double alpha, double x, const QuadratureConfig& cfg) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("weighted_integral: alpha must be >= 0");
  if (!(x >= 2.0)) throw std::domain_error("weighted_integral: x must be >= 2");
  if (x == 2.0) return 0.0;
  const auto f = [alpha](double t) { return std::pow(t, alpha) / std::log(t); };
  return adaptive_quadrature(f, 2.0, x, cfg, "weighted_integral");
}

double li(double x, const QuadratureConfig& cfg) { return weighted_integral(0.0, x, cfg); }

double li_inverse(double y, const QuadratureConfig& cfg) {
  if (!(y >= 0.0)) throw std::domain_error("li_inverse: y must be >= 0");
  if (y == 0.0) return 2.0;

  const double tol = 1e-9 * std::max(1.0, y);
  QuadratureConfig step_cfg = cfg;
  step_cfg.abs_tol = std::min(cfg.abs_tol, tol / 64.0);
  const auto piece = [&step_cfg](double a, double b) {
    return adaptive_quadrature(inverse_log, a, b, step_cfg, "li_inverse");
  };

  // Bracket [lo, hi] with li(lo) <= y <= li(hi).  li values ride along so
  // each move only integrates the increment.
  double lo = 2.0, lo_val = 0.0;
  double hi = std::max(4.0, y * std::log(std::max(y, 3.0)));
  double hi_val = piece(2.0, hi);
  while (hi_val < y) {
    const double wider = hi * 2.0;
    if (!std::isfinite(wider))
      throw ConvergenceError("li_inverse: bracket search diverged", y - hi_val);
    lo = hi;
    lo_val = hi_val;
    hi_val += piece(hi, wider);
    hi = wider;
  }

  double cur = lo, cur_val = lo_val;
  for (int iter = 0; iter < 200; ++iter) {
    const double resid = cur_val - y;
    if (std::fabs(resid) <= tol) return cur;

    // Newton step x - (li(x) - y) log x, bisection when it leaves the bracket.
    double next = cur - resid * std::log(cur);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double delta = piece(std::min(cur, next), std::max(cur, next));
    const double next_val = (next >= cur) ? cur_val + delta : cur_val - delta;

    if (next_val <= y) {
      lo = next;
      lo_val = next_val;
    } else {
      hi = next;
      hi_val = next_val;
    }
    cur = next;
    cur_val = next_val;
  }
  throw ConvergenceError("li_inverse: no convergence after 200 iterations",
                         std::fabs(cur_val - y));
}

SumVsIntegral sum_vs_integral(double alpha, double x, const QuadratureConfig& cfg) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("sum_vs_integral: alpha must be >= 0");
  if (!(x >= 3.0)) throw std::domain_error("sum_vs_integral: x must be >= 3");

  // Kahan accumulation over n = 3..floor(x).
  double sum = 0.0, comp = 0.0;
  const auto top = static_cast<std::uint64_t>(x);
  for (std::uint64_t n = 3; n <= top; ++n) {
    const double nd = static_cast<double>(n);
    const double term = std::pow(nd, alpha) / std::log(nd);
    const double t = term - comp;
    const double s = sum + t;
    comp = (s - sum) - t;
    sum = s;
  }
  const double integral = weighted_integral(alpha, x, cfg);
  return SumVsIntegral{sum, integral, sum - integral};
}

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t used = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0)) throw std::invalid_argument("fit_exponent: x must be > 0");
    if (y < 0.0) throw std::invalid_argument("fit_exponent: y must be >= 0");
    if (y == 0.0) continue;
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++used;
  }
  if (used < 2) throw std::invalid_argument("fit_exponent: fewer than 2 usable points");
  const double n = static_cast<double>(used);
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_exponent: degenerate abscissae");
  ExponentFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.points_used = used;
  return fit;
}

}  // namespace primecurtain
