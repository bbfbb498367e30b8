#pragma once

#include <functional>
#include <span>

namespace polygauge::numerics {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // >= 0
  int panels = 0;
  bool converged = true;
};

inline constexpr int kMaxQuadratureDepth = 60;

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b] with absolute
/// tolerance tol. The integrand is assumed smooth on the panel; callers split
/// at known kinks. `converged` is false when the depth cap was hit with the
/// accumulated error estimate still above tol.
QuadratureResult integrate(const Integrand& f, double a, double b, double tol);

/// Integrates over consecutive panels [cuts[i], cuts[i+1]]. Cut points
/// outside [a, b] are ignored; duplicates are merged. The tolerance is shared
/// evenly across panels.
QuadratureResult integrate_split(const Integrand& f, double a, double b,
                                 std::span<const double> cuts, double tol);

/// Same as integrate_split, but throws QuadratureError on non-convergence.
double integrate_or_throw(const Integrand& f, double a, double b,
                          std::span<const double> cuts, double tol);

/// (f(x + h) - f(x - h)) / (2h).
double central_diff(const Integrand& f, double x, double h);

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign
/// (or one of them be zero). Stops when the bracket is narrower than tol.
double bisect(const Integrand& f, double lo, double hi, double tol);

}  // namespace polygauge::numerics
