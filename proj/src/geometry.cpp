#include "polygauge/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "polygauge/error.hpp"

namespace polygauge {

RegularPolygon::RegularPolygon(int n, double r) : n_(n), r_(r) {
  if (n < 3) throw InvalidParameter("polygon needs n >= 3, got " + std::to_string(n));
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InvalidParameter("polygon needs a finite circumradius r > 0");
  }
  const double pi = std::numbers::pi;
  K_ = (n - 2) / 2;
  perimeter_ = 2.0 * n * r * std::sin(pi / n);
  area_ = 0.5 * n * r * r * std::sin(2.0 * pi / n);
  const double c = std::cos(pi / (2.0 * n));
  lambda_ = 2.0 * r * c * c;
  apothem_ = r * std::cos(pi / n);
  ell_.reserve(K_ + 2);
  const double w = pi / n;
  for (int k = 0; k <= K_ + 1; ++k) ell_.push_back(2.0 * r * std::sin(k * w));
  vertices_.reserve(n);
  normals_.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * pi * i / n;
    vertices_.push_back({r * std::cos(a), r * std::sin(a)});
    const double b = (2.0 * i + 1.0) * pi / n;
    normals_.push_back({std::cos(b), std::sin(b)});
  }
}

double RegularPolygon::ell(int k) const {
  if (k < 0 || k > K_ + 1) {
    throw InvalidParameter("ell: index " + std::to_string(k) + " outside 0..K+1");
  }
  return ell_[static_cast<std::size_t>(k)];
}

std::vector<double> RegularPolygon::seams() const {
  std::vector<double> out(ell_.begin() + 1, ell_.end() - 1);
  if (odd()) {
    // ell_K < lambda < ell_{K+1}
    out.push_back(lambda_);
  }
  return out;
}

std::vector<Point> vertices(const RegularPolygon& poly) { return poly.vertices(); }

double chord_length(const RegularPolygon& poly, const Line& line) {
  const double c = std::cos(line.phi);
  const double s = std::sin(line.phi);
  // Foot of the perpendicular and the line direction.
  const Point foot{line.p * c, line.p * s};
  const Point dir{-s, c};
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const double h = poly.apothem();
  for (const Point& nrm : poly.side_normals()) {
    const double slack = h - (nrm.x * foot.x + nrm.y * foot.y);
    const double rate = nrm.x * dir.x + nrm.y * dir.y;
    if (rate == 0.0) {
      if (slack < 0.0) return 0.0;
      continue;
    }
    const double t = slack / rate;
    if (rate > 0.0) {
      hi = std::min(hi, t);
    } else {
      lo = std::max(lo, t);
    }
    if (lo >= hi) return 0.0;
  }
  return hi - lo;
}

bool contains(const RegularPolygon& poly, const Point& pt) {
  const double h = poly.apothem() + 1e-12 * poly.r();
  for (const Point& nrm : poly.side_normals()) {
    if (nrm.x * pt.x + nrm.y * pt.y > h) return false;
  }
  return true;
}

}  // namespace polygauge
