#pragma once

#include <vector>

#include "polygauge/geometry.hpp"

namespace polygauge {

/// Which closed-form piece the distance function d_k*(s, psi) uses at a given
/// (s, psi): q_k(s, psi), q_{k+1}(s, psi - pi/n), or zero when no chord of
/// length s exists perpendicular to that direction. `zero` only occurs for
/// the top branch k = K (no chord of that length in the direction).
enum class BranchKind { qk, qk_shifted, zero };

struct ProfileBranch {
  BranchKind kind = BranchKind::qk;
  /// Index of the q function that is evaluated (k for qk, k+1 for qk_shifted).
  int k = 0;
};

/// Chord-length branch index: the k in 0..K with ell_k <= s < ell_{k+1};
/// s >= ell_{K+1} maps to K and s < 0 to 0.
int branch_index(const RegularPolygon& poly, double s);

/// Distance from the centre to a chord of length s spanning sides i and
/// i+k, whose normal makes angle psi with the direction of the side-line
/// intersection point. Requires 1 <= k <= K+1.
double q(const RegularPolygon& poly, int k, double s, double psi);

/// Angle at which the chord of length s between sides i and i+k reaches the
/// vertex shared with side i+k+1. Requires 1 <= k <= K and
/// ell_k <= s <= ell_{k+1}.
double alpha(const RegularPolygon& poly, int k, double s);

/// Odd n only: half-width (measured from psi = 0) of the direction window
/// that still admits a chord of length s >= lambda. Requires
/// lambda <= s <= ell_{K+1}.
double beta(const RegularPolygon& poly, double s);

/// Piece selection for d_star on the fundamental interval, after mirroring
/// psi in (pi/n, 2pi/n] to 2pi/n - psi.
ProfileBranch profile_branch(const RegularPolygon& poly, int k, double s, double psi);

/// Distance function on one period, 0 <= psi <= 2pi/n, for
/// ell_k <= s <= ell_{k+1}.
double d_star(const RegularPolygon& poly, int k, double s, double psi);

/// Signed distance from the origin of the line with normal angle phi that
/// cuts a chord of length s (0 if no such line exists), for
/// ell_k <= s <= ell_{k+1} and any phi. A negative value -p means the chord
/// lies beyond the centre, on the line (p, phi + pi); the breadth of the
/// strip of longer chords is d(s, phi) + d(s, phi + pi) either way.
/// The reduction phi -> psi uses the direction of the side-line intersection
/// I_k, which sits at angle (2j + k + 1) pi/n for the vertex-on-x-axis
/// anchoring.
double d(const RegularPolygon& poly, int k, double s, double phi);

/// Convenience overload selecting k = branch_index(s).
double d(const RegularPolygon& poly, double s, double phi);

/// Points in (0, pi/n) where d_star(s, .) switches piece: alpha_k(s) and, in
/// the odd-n s >= lambda case, beta(s) and pi/n - beta(s).
std::vector<double> profile_kinks(const RegularPolygon& poly, int k, double s);

/// Measure of lines with chord longer than s:
/// mu_k(s) = 2n * integral_0^{pi/n} d_k(s, psi) dpsi, by adaptive quadrature
/// split at the profile kinks. Throws QuadratureError if the quadrature does
/// not converge.
double mu_numeric(const RegularPolygon& poly, int k, double s, double tol = 1e-13);

}  // namespace polygauge
