#pragma once

#include <array>
#include <vector>

#include "polygauge/chord_law.hpp"

namespace polygauge {

/// First and second antiderivative towers of the chord basis:
/// L*_i = integral L_i dt and L°_i = integral t L*_i dt.
std::array<double, 4> star_basis(double t, double a);
std::array<double, 4> ring_basis(double t, double a);

/// h*_k(t, a, b) = sum_i theta_i L*_i(t, a); zero for k = 0 or t = 0.
double h_star(const RegularPolygon& poly, int k, double t, double a, double b,
              const ThetaSigns& signs = {});

/// h°_k(t, a, b) = sum_i theta_i L°_i(t, a); zero for k = 0 or t = 0.
double h_ring(const RegularPolygon& poly, int k, double t, double a, double b,
              const ThetaSigns& signs = {});

/// Law of the distance between two independent uniform points in a regular
/// polygon, built on the chord law's branch coefficients.
///
/// phi*(t) = integral_0^t F and phi°(t) = integral_0^t s phi*(s) ds are
/// assembled from prefix sums over the branch intervals, fixed at
/// construction, plus one antiderivative difference on the current branch.
class DistanceLaw {
 public:
  explicit DistanceLaw(ChordLaw law);
  explicit DistanceLaw(const RegularPolygon& poly, ThetaSigns signs = {})
      : DistanceLaw(ChordLaw(poly, signs)) {}

  const ChordLaw& chord_law() const { return law_; }
  const RegularPolygon& polygon() const { return law_.polygon(); }

  /// c_lambda = h*_{K+1}(lambda, A2, B2 + pi/n) + h*_{K+1}(lambda, A2, B2);
  /// zero for even n.
  double lambda_correction() const { return c_lambda_; }

  /// Antiderivative H*_k of the chord branch H_k (continuous across lambda
  /// for odd n) and its tower H°_k = integral t H*_k dt.
  double H_star(const Segment& seg, double t) const;
  double H_ring(const Segment& seg, double t) const;

  /// Branch-index forms; the lambda piece is selected by t >= lambda.
  double H_star(int k, double t) const;
  double H_ring(int k, double t) const;

  double phi_star(double t, Side side = Side::right) const;
  double phi_ring(double t, Side side = Side::right) const;

  /// g(t); zero outside [0, ell_{K+1}).
  double pdf(double t, Side side = Side::right) const;
  /// G(t); 0 below 0 and 1 from ell_{K+1} on.
  double cdf(double t, Side side = Side::right) const;

 private:
  double tower(const Segment& seg, double t, bool ring) const;

  ChordLaw law_;
  double c_lambda_ = 0.0;
  std::vector<double> jstar_prefix_;  // sum_{nu<k} J*_nu(ell_nu, ell_{nu+1})
  std::vector<double> kring_prefix_;  // sum_{nu<k} K_nu(ell_{nu+1})
  std::vector<double> hstar_at_start_;  // H*_k(ell_k)
  std::vector<double> hring_at_start_;  // H°_k(ell_k)
};

double pdf_distance(const DistanceLaw& law, double t);
double cdf_distance(const DistanceLaw& law, double t);

/// E[t] = integral t g(t) dt, split at every breakpoint.
double mean_distance(const DistanceLaw& law, double tol = 1e-10);

/// Closed-form distance density for the equilateral triangle with
/// circumradius r; zero outside [0, sqrt(3) r).
double triangle_pdf_closed(double r, double t);

/// (sqrt(3) r / 20)(4 + 3 ln 3).
double triangle_mean_distance(double r);

/// Independent route to g(t) through the chord law only:
/// (2 u t / A^2) * integral_t^{ell_{K+1}} (s - t) f(s) ds, with f from
/// central differences of F on panel interiors and Stieltjes integration by
/// parts on strips next to every breakpoint. Requires 0 < t < ell_{K+1}.
double piefke_check(const DistanceLaw& law, double t, double tol = 1e-11);

}  // namespace polygauge
