#pragma once

#include <array>
#include <span>
#include <vector>

#include "polygauge/geometry.hpp"

namespace polygauge {

/// Per-row multipliers applied to the theta coefficients. All +1 for the
/// real laws; flipping a row is how the verifier's mutation smoke test
/// corrupts the closed forms on purpose.
struct ThetaSigns {
  std::array<double, 4> sign{1.0, 1.0, 1.0, 1.0};

  static ThetaSigns flipped(int row);  // row in 1..4
  bool identity() const;
};

/// Which side of a breakpoint an evaluation selects. `right` gives the value
/// on the half-open interval [ell_k, ell_{k+1}) (and s >= lambda for odd n);
/// `left` gives the limit from below.
enum class Side { right, left };

/// A piece of the piecewise laws: branch k and, for the odd-n top branch,
/// whether the four-term s >= lambda form applies.
struct Segment {
  int k = 0;
  bool above_lambda = false;
};

Segment segment_at(const RegularPolygon& poly, double s, Side side = Side::right);

/// theta_i(k, a, b), i in 1..4: coefficients of the basis functions
/// s, 1/s, sqrt(s^2 - a^2)/s and s*asin(a/s) in the closed form of the
/// integrated distance profile. Throws when 2k pi/n is a multiple of pi.
double theta(const RegularPolygon& poly, int k, int i, double a, double b);

/// L_i(s, a) for i = 1..4, with a clamped to s.
std::array<double, 4> chord_basis(double s, double a);

/// h_k(s, a, b) = sum_i theta_i(k, a, b) L_i(s, a); zero for k = 0.
/// Requires s > 0 and a <= s (overshoot up to 1e-12 relative is clamped).
double h(const RegularPolygon& poly, int k, double s, double a, double b,
         const ThetaSigns& signs = {});

/// One weighted h-term of a branch function: weight * h_m(., a, b), with the
/// theta row values cached.
struct HTerm {
  int m = 0;
  double a = 0.0;
  double b = 0.0;
  double weight = 0.0;
  std::array<double, 4> theta{};
};

/// Closed-form chord length distribution of a regular polygon. The branch
/// functions H_k are stored as lists of h-terms so that the distance law can
/// reuse the same coefficients with the integrated bases.
class ChordLaw {
 public:
  explicit ChordLaw(RegularPolygon poly, ThetaSigns signs = {});

  const RegularPolygon& polygon() const { return poly_; }
  const ThetaSigns& signs() const { return signs_; }

  double A1(int k) const;  // 2 r sin(k pi/n) sin((k+1) pi/n), k = 0..K
  double B1(int k) const { return k * poly_.half_angle(); }
  double A2() const { return a2_; }  // equals lambda
  double B2() const { return b2_; }

  std::span<const HTerm> terms(const Segment& seg) const;

  /// H_k(s) for the given segment, valid on its closed interval, s > 0.
  double branch(const Segment& seg, double s) const;

  /// F(s). F(0) is exactly 0; s >= ell_{K+1} gives 1 (right side).
  double cdf(double s, Side side = Side::right) const;

 private:
  std::size_t slot(const Segment& seg) const;

  RegularPolygon poly_;
  ThetaSigns signs_;
  std::vector<double> a1_;
  double a2_;
  double b2_;
  // One term list per k = 0..K, plus the odd-n s >= lambda list at index K+1.
  std::vector<std::vector<HTerm>> terms_;
};

double cdf_chord(const ChordLaw& law, double s, Side side = Side::right);

/// Small-s form F(s) = [(1 - x cot x) csc x + x sec x] s / (4r), x = pi/n.
/// Valid for 0 <= s <= lambda (n = 3) or 0 <= s <= ell_1 (n >= 4).
double cdf_chord_linear(const ChordLaw& law, double s);

/// Slope of the small-s form, [(1 - x cot x) csc x + x sec x] / (4r).
double linear_slope(const RegularPolygon& poly);

/// Central-difference chord density. Throws if the stencil [s-step, s+step]
/// straddles a breakpoint (ell_k or lambda).
double pdf_chord_numeric(const ChordLaw& law, double s, double step);

/// Mean chord by Stieltjes integration of s dF, via integration by parts:
/// ell_{K+1} - integral_0^{ell_{K+1}} F(s) ds, split at every seam.
double mean_chord_stieltjes(const ChordLaw& law, double tol = 1e-13);

/// pi A / u.
double mean_chord(const RegularPolygon& poly);

/// All breakpoints of the piecewise laws, including 0 and ell_{K+1}.
std::vector<double> breakpoints(const RegularPolygon& poly);

}  // namespace polygauge
