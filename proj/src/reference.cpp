#include "polygauge/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polygauge/error.hpp"
#include "polygauge/numerics.hpp"

namespace polygauge::reference {

double circle_chord_cdf(double r, double s) {
  if (!(r > 0.0)) throw InvalidParameter("circle: requires r > 0");
  if (s <= 0.0) return 0.0;
  if (s >= 2.0 * r) return 1.0;
  const double x = s / (2.0 * r);
  return 1.0 - std::sqrt(1.0 - x * x);
}

double circle_distance_pdf(double r, double t) {
  if (!(r > 0.0)) throw InvalidParameter("circle: requires r > 0");
  if (t <= 0.0 || t >= 2.0 * r) return 0.0;
  const double x = t / (2.0 * r);
  return 4.0 * t / (std::numbers::pi * r * r) * (std::acos(x) - x * std::sqrt(1.0 - x * x));
}

double circle_distance_cdf(double r, double t) {
  if (!(r > 0.0)) throw InvalidParameter("circle: requires r > 0");
  if (t <= 0.0) return 0.0;
  if (t >= 2.0 * r) return 1.0;
  const auto f = [r](double x) { return circle_distance_pdf(r, x); };
  return std::clamp(numerics::integrate_or_throw(f, 0.0, t, {}, 1e-13), 0.0, 1.0);
}

}  // namespace polygauge::reference
