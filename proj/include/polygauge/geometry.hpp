#pragma once

#include <numbers>
#include <vector>

namespace polygauge {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Line {(x, y) : x cos(phi) + y sin(phi) = p} in normal form. `phi` is the
/// direction of the normal, `p >= 0` the distance from the origin.
struct Line {
  double p = 0.0;
  double phi = 0.0;
};

/// Regular n-gon with circumradius r centred at the origin, first vertex on
/// the positive x-axis. Holds the derived constants every law needs:
/// perimeter u, area A, branch count K = floor((n-2)/2), the vertex-distance
/// thresholds ell_k = 2 r sin(k pi/n) for k = 0..K+1 and, for odd n, the
/// threshold lambda = 2 r cos^2(pi/2n).
class RegularPolygon {
 public:
  /// Throws InvalidParameter unless n >= 3 and r > 0 (finite).
  RegularPolygon(int n, double r);

  int n() const { return n_; }
  double r() const { return r_; }
  double perimeter() const { return perimeter_; }
  double area() const { return area_; }
  int K() const { return K_; }
  bool odd() const { return n_ % 2 == 1; }
  /// lambda = 2 r cos^2(pi/2n). Meaningful only for odd n.
  double lambda() const { return lambda_; }
  /// ell_k for k in 0..K+1.
  double ell(int k) const;
  const std::vector<double>& thresholds() const { return ell_; }
  double max_chord() const { return ell_.back(); }
  /// r cos(pi/n), distance from the centre to every side.
  double apothem() const { return apothem_; }
  /// pi/n.
  double half_angle() const { return std::numbers::pi / n_; }

  const std::vector<Point>& vertices() const { return vertices_; }
  /// Outward unit normals of the sides; side j has normal angle (2j+1) pi/n.
  const std::vector<Point>& side_normals() const { return normals_; }

  /// Interior breakpoints of the chord and distance laws in increasing order:
  /// ell_1..ell_K and, for odd n, lambda.
  std::vector<double> seams() const;

 private:
  int n_;
  double r_;
  int K_;
  double perimeter_;
  double area_;
  double lambda_;
  double apothem_;
  std::vector<double> ell_;
  std::vector<Point> vertices_;
  std::vector<Point> normals_;
};

std::vector<Point> vertices(const RegularPolygon& poly);

/// Length of line ∩ polygon, by clipping the line's parameter interval
/// against each bounding half-plane. Empty or single-point intersections
/// give 0.
double chord_length(const RegularPolygon& poly, const Line& line);

/// True iff pt lies in the closed polygon. Uses a relative slack of 1e-12 r so
/// that vertices and boundary points count as inside.
bool contains(const RegularPolygon& poly, const Point& pt);

}  // namespace polygauge
