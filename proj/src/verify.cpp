#include "polygauge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polygauge/montecarlo.hpp"
#include "polygauge/numerics.hpp"
#include "polygauge/profile.hpp"

namespace polygauge::verify {

double quadrature_gap(const ChordLaw& law, int points_per_branch) {
  const RegularPolygon& poly = law.polygon();
  double worst = 0.0;
  for (int k = 0; k <= poly.K(); ++k) {
    const double lo = poly.ell(k);
    const double hi = poly.ell(k + 1);
    for (int j = 0; j < points_per_branch; ++j) {
      const double s = j + 1 == points_per_branch ? hi : lo + (hi - lo) * j / (points_per_branch - 1);
      const double geometric = 1.0 - mu_numeric(poly, k, s) / poly.perimeter();
      worst = std::max(worst, std::abs(law.cdf(s) - geometric));
    }
  }
  return worst;
}

RoundTrip geometric_roundtrip(const RegularPolygon& poly, int draws, std::uint64_t seed) {
  mc::RandomStream rng(mc::RngSeed{seed}, 0x6e6f);
  RoundTrip out;
  for (int i = 0; i < draws; ++i) {
    const double s = poly.max_chord() * rng.uniform();
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const double p = d(poly, s, phi);
    if (p <= 0.0) continue;
    ++out.checked;
    out.max_error = std::max(out.max_error, std::abs(chord_length(poly, Line{p, phi}) - s));
  }
  return out;
}

SeamJumps seam_jumps(const DistanceLaw& law) {
  SeamJumps out;
  const ChordLaw& chord = law.chord_law();
  for (double x : law.polygon().seams()) {
    out.F = std::max(out.F, std::abs(chord.cdf(x, Side::left) - chord.cdf(x, Side::right)));
    out.G = std::max(out.G, std::abs(law.cdf(x, Side::left) - law.cdf(x, Side::right)));
    out.g = std::max(out.g, std::abs(law.pdf(x, Side::left) - law.pdf(x, Side::right)));
  }
  return out;
}

SeamJumps seam_stencil(const DistanceLaw& law, double eps) {
  SeamJumps out;
  const ChordLaw& chord = law.chord_law();
  for (double x : law.polygon().seams()) {
    out.F = std::max(out.F, std::abs(chord.cdf(x - eps) - chord.cdf(x + eps)));
    out.G = std::max(out.G, std::abs(law.cdf(x - eps) - law.cdf(x + eps)));
    out.g = std::max(out.g, std::abs(law.pdf(x - eps) - law.pdf(x + eps)));
  }
  return out;
}

double linear_gap(const ChordLaw& law, int points) {
  const RegularPolygon& poly = law.polygon();
  const double limit = std::min(poly.ell(1), poly.lambda());
  const double slope = linear_slope(poly);
  double worst = 0.0;
  for (int j = 0; j < points; ++j) {
    const double s = j + 1 == points ? limit : limit * j / (points - 1);
    worst = std::max(worst, std::abs(law.cdf(s) - slope * s));
  }
  return worst;
}

double normalization_gap(const DistanceLaw& law) {
  const RegularPolygon& poly = law.polygon();
  const std::vector<double> cuts = poly.seams();
  const double total = numerics::integrate_or_throw(
      [&](double t) { return law.pdf(t, Side::left); }, 0.0, poly.max_chord(), cuts, 1e-12);
  return std::abs(total - 1.0);
}

double mean_chord_gap(const ChordLaw& law) {
  const double exact = mean_chord(law.polygon());
  return std::abs(mean_chord_stieltjes(law) - exact) / exact;
}

double piefke_gap(const DistanceLaw& law, int points) {
  const RegularPolygon& poly = law.polygon();
  const double top = poly.max_chord();
  const std::vector<double> seams = breakpoints(poly);
  double worst = 0.0;
  for (int j = 0; j < points; ++j) {
    double t = top * (0.02 + 0.93 * j / std::max(1, points - 1));
    for (double x : seams) {
      if (std::abs(t - x) < 1e-6 * poly.r()) t = x - 1e-6 * poly.r();
    }
    const double g = law.pdf(t);
    worst = std::max(worst, std::abs(piefke_check(law, t) - g) / g);
  }
  return worst;
}

double ks_chords(const ChordLaw& law, std::size_t samples, std::uint64_t seed, unsigned threads) {
  const mc::EmpiricalCdf emp(
      mc::draw(law.polygon(), mc::SampleKind::chord, samples, mc::RngSeed{seed}, threads));
  return mc::ks_distance(emp, [&](double s) { return law.cdf(s); });
}

double ks_distances(const DistanceLaw& law, std::size_t samples, std::uint64_t seed,
                    unsigned threads) {
  const mc::EmpiricalCdf emp(mc::draw(law.polygon(), mc::SampleKind::pair_distance, samples,
                                      mc::RngSeed{seed}, threads));
  return mc::ks_distance(emp, [&](double t) { return law.cdf(t); });
}

std::vector<CheckResult> run_suite(const Options& options) {
  std::vector<CheckResult> out;
  auto record = [&](const char* name, int n, double metric, double threshold) {
    out.push_back({name, n, metric, threshold, metric < threshold, false});
  };
  for (int n = options.n_min; n <= options.n_max; ++n) {
    const RegularPolygon poly(n, options.r);
    const DistanceLaw law(poly, options.signs);
    const ChordLaw& chord = law.chord_law();

    record("quadrature_equivalence", n, quadrature_gap(chord), 1e-8);
    const RoundTrip rt = geometric_roundtrip(poly, 400, options.seed);
    record("geometric_roundtrip", n, rt.checked >= 200 ? rt.max_error : 1.0, 1e-9);
    const SeamJumps jumps = seam_jumps(law);
    record("continuity_F", n, jumps.F, 1e-8);
    record("continuity_G", n, jumps.G, 1e-8);
    record("continuity_g", n, jumps.g, 1e-8);
    record("linear_law", n, linear_gap(chord), 1e-12);
    record("normalization", n, normalization_gap(law), 1e-6);
    record("mean_chord", n, mean_chord_gap(chord), 1e-6);
    record("piefke", n, piefke_gap(law, 20), 1e-5);
    if (n == 3) {
      const double exact = triangle_mean_distance(options.r);
      record("triangle_mean_distance", n, std::abs(mean_distance(law) - exact), 1e-9);
    }
    const double ks_limit = 4.0 / std::sqrt(static_cast<double>(options.samples));
    if (options.samples < kMinMonteCarloSamples) {
      out.push_back({"mc_chords", n, 0.0, ks_limit, true, true});
      out.push_back({"mc_distances", n, 0.0, ks_limit, true, true});
    } else {
      record("mc_chords", n, ks_chords(chord, options.samples, options.seed, options.threads),
             ks_limit);
      record("mc_distances", n,
             ks_distances(law, options.samples, options.seed + 1, options.threads), ks_limit);
    }
  }
  return out;
}

}  // namespace polygauge::verify
