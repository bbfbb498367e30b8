#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "doctest.h"
#include "polygauge/distance_law.hpp"
#include "polygauge/error.hpp"
#include "polygauge/montecarlo.hpp"

using namespace polygauge;
using namespace polygauge::mc;

namespace {

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  double sum = 0.0, sq = 0.0;
  for (double x : xs) {
    sum += x;
    sq += x * x;
  }
  const double n = static_cast<double>(xs.size());
  const double mean = sum / n;
  return {mean, std::sqrt((sq / n - mean * mean) / n)};
}

}  // namespace

TEST_CASE("streams are deterministic and distinct") {
  RandomStream a({42}, 0), b({42}, 0), c({42}, 1), d({43}, 0);
  std::set<std::uint64_t> firsts;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    firsts.insert(x);
  }
  CHECK(c.next() != RandomStream({42}, 0).next());
  CHECK(d.next() != RandomStream({42}, 0).next());
  CHECK(firsts.size() == 100);
  CHECK(splitmix64(0) != splitmix64(1));
}

TEST_CASE("uniform stays in [0, 1)") {
  RandomStream rng({7});
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo < 1e-4);
  CHECK(hi > 1 - 1e-4);
  CHECK(std::fabs(sum / N - 0.5) < 3 * std::sqrt(1.0 / 12 / N));
}

TEST_CASE("sample_point is uniform in the polygon") {
  for (int n : {3, 4, 7, 12}) {
    RegularPolygon p(n, 1.0);
    RandomStream rng({11}, static_cast<std::uint64_t>(n));
    const int N = 200000;
    std::vector<double> xs, ys;
    // Halves cut by two mirror axes: the x-axis and the line at angle pi/n.
    const double ca = std::cos(std::numbers::pi / n), sa = std::sin(std::numbers::pi / n);
    int upper = 0, tilted = 0;
    for (int i = 0; i < N; ++i) {
      const Point pt = sample_point(p, rng);
      REQUIRE(contains(p, pt));
      xs.push_back(pt.x);
      ys.push_back(pt.y);
      upper += pt.y > 0.0;
      tilted += pt.y * ca - pt.x * sa > 0.0;
    }
    const auto mx = moments(xs), my = moments(ys);
    CHECK(std::fabs(mx.mean) < 3 * mx.se);
    CHECK(std::fabs(my.mean) < 3 * my.se);
    const double half_se = std::sqrt(0.25 / N);
    CHECK(std::fabs(upper / double(N) - 0.5) < 3 * half_se);
    CHECK(std::fabs(tilted / double(N) - 0.5) < 3 * half_se);
  }
}

TEST_CASE("sample_chord: bounded and mean pi A / u") {
  for (int n : {3, 4, 5, 8}) {
    RegularPolygon p(n, 1.0);
    const auto xs = draw(p, SampleKind::chord, 400000, {2024}, 2);
    for (double x : xs) {
      REQUIRE(x > 0.0);
      REQUIRE(x <= p.max_chord() * (1 + 1e-12));
    }
    const auto m = moments(xs);
    CHECK(std::fabs(m.mean - mean_chord(p)) < 3 * m.se);
  }
}

TEST_CASE("sample_pair_distance: bounded and triangle mean") {
  RegularPolygon tri(3, 1.0);
  const auto xs = draw(tri, SampleKind::pair_distance, 1000000, {5}, threads_from_env());
  for (double x : xs) REQUIRE(x < tri.max_chord());
  const auto m = moments(xs);
  CHECK(std::fabs(m.mean - triangle_mean_distance(1.0)) < 3 * m.se);
}

TEST_CASE("draw does not depend on the worker count") {
  RegularPolygon p(7, 1.0);
  const std::size_t N = 3 * 65536 + 123;
  const auto one = draw(p, SampleKind::pair_distance, N, {99}, 1);
  for (unsigned t : {2u, 3u, 8u}) CHECK(draw(p, SampleKind::pair_distance, N, {99}, t) == one);
  CHECK(draw(p, SampleKind::chord, 1000, {99}, 4) == draw(p, SampleKind::chord, 1000, {99}, 1));
  CHECK(draw(p, SampleKind::chord, 1000, {98}, 1) != draw(p, SampleKind::chord, 1000, {99}, 1));
  CHECK(draw(p, SampleKind::chord, 0, {1}, 4).empty());
}

TEST_CASE("EmpiricalCdf") {
  EmpiricalCdf e({3.0, 1.0, 2.0, 2.0});
  CHECK(e(0.5) == 0.0);
  CHECK(e(1.0) == 0.25);
  CHECK(e(2.0) == 0.75);
  CHECK(e(10.0) == 1.0);
  CHECK(e.mean() == 2.0);
  const auto m = EmpiricalCdf::merge(e, EmpiricalCdf({0.0}));
  CHECK(m.size() == 5);
  CHECK(m.samples().front() == 0.0);
  CHECK_THROWS_AS(EmpiricalCdf({}), InvalidParameter);
}

TEST_CASE("ks_distance") {
  CHECK(ks_distance(EmpiricalCdf({0.0}), [](double) { return 0.5; }) == 0.5);
  // Exact uniform quantiles: the statistic is 1/(2N).
  std::vector<double> q;
  for (int i = 0; i < 100; ++i) q.push_back((i + 0.5) / 100.0);
  CHECK(ks_distance(EmpiricalCdf(q), [](double x) { return x; }) == doctest::Approx(0.005));
}

TEST_CASE("Monte Carlo agrees with the analytic laws") {
  const std::size_t N = 200000;
  const double bound = 4.0 / std::sqrt(double(N));
  for (int n : {3, 4, 7}) {
    DistanceLaw dl(RegularPolygon(n, 1.0));
    const auto& p = dl.polygon();
    EmpiricalCdf chords(draw(p, SampleKind::chord, N, {1}, threads_from_env()));
    EmpiricalCdf dists(draw(p, SampleKind::pair_distance, N, {2}, threads_from_env()));
    CHECK(ks_distance(chords, [&](double s) { return dl.chord_law().cdf(s); }) < bound);
    CHECK(ks_distance(dists, [&](double t) { return dl.cdf(t); }) < bound);
    // Negative control: the wrong law is far outside the bound.
    CHECK(ks_distance(chords, [&](double t) { return dl.cdf(t); }) > 10 * bound);
  }
}

TEST_CASE("threads_from_env is at least one") { CHECK(threads_from_env() >= 1u); }
