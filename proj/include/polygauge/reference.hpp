#pragma once

namespace polygauge::reference {

/// Chord length distribution of a disk of radius r under the invariant line
/// measure: 1 - sqrt(1 - (s / 2r)^2) on [0, 2r].
double circle_chord_cdf(double r, double s);

/// Density of the distance between two uniform points in a disk of radius r:
/// (4t / (pi r^2)) [acos(t / 2r) - (t / 2r) sqrt(1 - (t / 2r)^2)] on [0, 2r].
double circle_distance_pdf(double r, double t);

/// Distribution of the same distance, by quadrature of the density.
double circle_distance_cdf(double r, double t);

}  // namespace polygauge::reference
