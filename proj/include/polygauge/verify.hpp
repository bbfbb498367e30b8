#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polygauge/chord_law.hpp"
#include "polygauge/distance_law.hpp"

namespace polygauge::verify {

// Each check returns the worst observed discrepancy; thresholds live with the
// callers (the CLI verifier and the acceptance suite).

/// max |F(s) - (1 - mu_k(s)/u)| over `points` evenly spaced s per branch
/// interval [ell_k, ell_{k+1}], endpoints included.
double quadrature_gap(const ChordLaw& law, int points_per_branch = 50);

struct RoundTrip {
  double max_error = 0.0;
  int checked = 0;  // pairs with d(s, phi) > 0
};

/// Random (s, phi) pairs; for each with d(s, phi) = p > 0 compares the
/// clipped chord length of the line (p, phi) against s.
RoundTrip geometric_roundtrip(const RegularPolygon& poly, int draws, std::uint64_t seed);

/// Largest difference between the one-sided limits of F, G and g at every
/// interior breakpoint (ell_1..ell_K and, for odd n, lambda).
struct SeamJumps {
  double F = 0.0;
  double G = 0.0;
  double g = 0.0;
};
SeamJumps seam_jumps(const DistanceLaw& law);

/// Same quantities measured with a symmetric stencil |X(x - eps) - X(x + eps)|.
SeamJumps seam_stencil(const DistanceLaw& law, double eps);

/// max |F(s) - slope * s| on [0, min(ell_1, lambda)] (n = 3: [0, lambda]).
double linear_gap(const ChordLaw& law, int points = 200);

/// |integral g - 1|.
double normalization_gap(const DistanceLaw& law);

/// Relative gap between the Stieltjes mean chord and pi A / u.
double mean_chord_gap(const ChordLaw& law);

/// max relative |piefke_check(t) - g(t)| over `points` interior abscissae
/// t in [0.02, 0.95] * ell_{K+1}, kept away from breakpoints.
double piefke_gap(const DistanceLaw& law, int points = 50);

/// Kolmogorov distance between `samples` Monte Carlo draws and the
/// analytic law (chords against F, point distances against G).
double ks_chords(const ChordLaw& law, std::size_t samples, std::uint64_t seed, unsigned threads);
double ks_distances(const DistanceLaw& law, std::size_t samples, std::uint64_t seed,
                    unsigned threads);

struct CheckResult {
  std::string name;
  int n = 0;
  double metric = 0.0;
  double threshold = 0.0;
  bool passed = false;
  bool skipped = false;
};

struct Options {
  int n_min = 3;
  int n_max = 12;
  double r = 1.0;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  ThetaSigns signs;
};

/// Monte Carlo checks are skipped below this sample count.
inline constexpr std::size_t kMinMonteCarloSamples = 10'000;

/// Runs the full invariant suite for every n in [n_min, n_max].
std::vector<CheckResult> run_suite(const Options& options);

}  // namespace polygauge::verify
