#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "polygauge/geometry.hpp"

namespace polygauge::mc {

struct RngSeed {
  std::uint64_t seed = 0;
};

/// One independent random stream. Streams are derived from (seed, index)
/// through splitmix64, so workers can draw disjoint sequences without
/// coordination.
class RandomStream {
 public:
  RandomStream(RngSeed seed, std::uint64_t stream_index = 0);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Chord length of a random line under the invariant measure dp dphi,
/// conditioned on meeting the polygon: phi ~ U[0, 2pi), p ~ U[0, r],
/// rejected until the chord is non-degenerate.
double sample_chord(const RegularPolygon& poly, RandomStream& rng);

/// Uniform point in the polygon: a uniformly chosen centre-to-edge triangle,
/// then the square-root barycentric map inside it.
Point sample_point(const RegularPolygon& poly, RandomStream& rng);

double sample_pair_distance(const RegularPolygon& poly, RandomStream& rng);

/// Uniform point in the disk of radius r (for the circle reference curves).
Point sample_disk_point(double r, RandomStream& rng);

enum class SampleKind { chord, pair_distance };

/// N draws of the given kind, split into fixed-size streams (stream i uses
/// RandomStream(seed, i)) and run on up to `threads` workers. The output
/// order depends only on (N, seed), never on the worker count.
std::vector<double> draw(const RegularPolygon& poly, SampleKind kind, std::size_t count,
                         RngSeed seed, unsigned threads = 1);

/// Worker count from POLYGAUGE_THREADS, defaulting to the hardware count.
unsigned threads_from_env();

/// Sorted sample set viewed as a step-function CDF.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  /// Fraction of samples <= x.
  double operator()(double x) const;
  double mean() const;

  /// Union of two sample sets.
  static EmpiricalCdf merge(const EmpiricalCdf& lhs, const EmpiricalCdf& rhs);

 private:
  std::vector<double> samples_;
};

/// Kolmogorov sup-distance: max_i max(|i/N - F(x_i)|, |(i-1)/N - F(x_i)|).
double ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& analytic);

}  // namespace polygauge::mc
