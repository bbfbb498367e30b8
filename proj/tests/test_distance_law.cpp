#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polygauge/distance_law.hpp"
#include "polygauge/error.hpp"
#include "polygauge/numerics.hpp"
#include "support.hpp"

using namespace polygauge;
using numerics::central_diff;
using std::numbers::pi;
using testing::rel_err;

namespace {

// Interior abscissae of [lo, hi], kept a little away from both ends.
template <class Fn>
void interior(double lo, double hi, int count, Fn&& fn) {
  for (int j = 1; j <= count; ++j) fn(lo + (hi - lo) * (j + 0.5) / (count + 1.5));
}

// Relative check with an absolute floor for values near zero.
bool close(double got, double want, double rel) {
  return std::fabs(got - want) <= rel * std::max(std::fabs(want), 1e-3);
}

}  // namespace

TEST_CASE("h_star and h_ring zero cases") {
  RegularPolygon p(5, 1.0);
  CHECK(h_star(p, 0, 0.7, 0.1, 0.2) == 0.0);
  CHECK(h_star(p, 1, 0.0, 0.0, 0.2) == 0.0);
  CHECK(h_ring(p, 0, 0.7, 0.1, 0.2) == 0.0);
  CHECK(h_ring(p, 2, 0.0, 0.0, 0.2) == 0.0);
  CHECK_THROWS_AS(h_star(p, 1, 0.5, 0.9, 0.2), InvalidParameter);
  CHECK_THROWS_AS(h_ring(p, 1, -0.5, 0.0, 0.2), InvalidParameter);
}

TEST_CASE("tower bases at t = a") {
  for (double a : {0.3, 1.0, 2.5}) {
    CHECK(star_basis(a, a)[2] == doctest::Approx(a * pi / 2).epsilon(1e-15));
    CHECK(ring_basis(a, a)[3] == doctest::Approx(std::pow(a, 4) * pi / 16).epsilon(1e-14));
  }
}

TEST_CASE("star and ring bases differentiate back") {
  testing::Gen gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const double a = gen.integer(0, 3) == 0 ? 0.0 : gen.uniform(0.1, 1.5);
    const double t = a + gen.uniform(0.05, 1.0);
    const auto base = chord_basis(t, a);
    const auto star = star_basis(t, a);
    for (std::size_t i = 0; i < 4; ++i) {
      if (a == 0.0 && i == 3) continue;
      auto S = [&](double x) { return star_basis(x, a)[i]; };
      auto R = [&](double x) { return ring_basis(x, a)[i]; };
      CHECK(close(central_diff(S, t, 1e-5), base[i], 1e-7));
      CHECK(close(central_diff(R, t, 1e-5), t * star[i], 1e-7));
    }
  }
}

TEST_CASE("h_star is an antiderivative of h") {
  RegularPolygon p(5, 1.0);
  ChordLaw law(p);
  const int k = 1;
  const double a = law.A1(k), b = law.B1(k);
  interior(p.ell(1), p.ell(2), 20, [&](double t) {
    auto hs = [&](double x) { return h_star(p, k, x, a, b); };
    auto hr = [&](double x) { return h_ring(p, k, x, a, b); };
    CHECK(close(central_diff(hs, t, 1e-6), h(p, k, t, a, b), 1e-6));
    CHECK(close(central_diff(hr, t, 1e-6), t * h_star(p, k, t, a, b), 1e-6));
  });
}

TEST_CASE("branch towers differentiate back") {
  for (int n = 3; n <= 12; ++n) {
    DistanceLaw dl(RegularPolygon(n, 1.0));
    const auto& p = dl.polygon();
    const ChordLaw& cl = dl.chord_law();
    for (int k = 0; k <= p.K(); ++k) {
      interior(p.ell(k), p.ell(k + 1), 15, [&](double t) {
        if (p.odd() && std::fabs(t - p.lambda()) < 1e-4) return;
        const Segment seg = segment_at(p, t);
        auto Hs = [&](double x) { return dl.H_star(seg, x); };
        auto Hr = [&](double x) { return dl.H_ring(seg, x); };
        CHECK(close(central_diff(Hs, t, 1e-6), cl.branch(seg, t), 1e-5));
        CHECK(close(central_diff(Hr, t, 1e-6), t * dl.H_star(seg, t), 1e-5));
      });
    }
  }
}

TEST_CASE("phi towers differentiate back") {
  for (int n = 3; n <= 12; ++n) {
    DistanceLaw dl(RegularPolygon(n, 1.0));
    const auto& p = dl.polygon();
    const auto cuts = breakpoints(p);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      interior(cuts[i], cuts[i + 1], 10, [&](double t) {
        auto ps = [&](double x) { return dl.phi_star(x); };
        auto pr = [&](double x) { return dl.phi_ring(x); };
        CHECK(close(central_diff(ps, t, 1e-6), dl.chord_law().cdf(t), 1e-5));
        CHECK(close(central_diff(pr, t, 1e-6), t * dl.phi_star(t), 1e-5));
      });
    }
  }
}

TEST_CASE("H_star is continuous across lambda") {
  for (int n : {3, 5, 7, 9, 11, 13}) {
    DistanceLaw dl(RegularPolygon(n, 1.0));
    const auto& p = dl.polygon();
    const double eps = 1e-9 * p.r();
    CHECK(std::fabs(dl.H_star(p.K(), p.lambda() - eps) - dl.H_star(p.K(), p.lambda() + eps)) < 1e-8);
    // H° has a large slope at lambda, so compare its one-sided limits.
    const Segment below{p.K(), false}, above{p.K(), true};
    CHECK(std::fabs(dl.H_ring(below, p.lambda()) - dl.H_ring(above, p.lambda())) < 1e-12);
    CHECK(std::fabs(dl.H_star(below, p.lambda()) - dl.H_star(above, p.lambda())) < 1e-12);
  }
  DistanceLaw sq(RegularPolygon(4, 1.0));
  CHECK(std::isfinite(sq.H_star(1, 2.0)));
  CHECK(sq.lambda_correction() == 0.0);
  CHECK_THROWS_AS(sq.H_star(1, 0.5), InvalidParameter);
}

TEST_CASE("pdf and cdf endpoints") {
  for (int n = 3; n <= 20; ++n) {
    for (double r : {0.5, 1.0, 3.0}) {
      DistanceLaw dl(RegularPolygon(n, r));
      const double top = dl.polygon().max_chord();
      CHECK(dl.pdf(0.0) == 0.0);
      CHECK(dl.cdf(0.0) == 0.0);
      CHECK(dl.cdf(top) == 1.0);
      CHECK(std::fabs(dl.cdf(top, Side::left) - 1.0) < 1e-9);
      CHECK(std::fabs(dl.pdf(top, Side::left)) < 1e-7 / r);
    }
  }
}

TEST_CASE("G' = g") {
  for (int n = 3; n <= 12; ++n) {
    DistanceLaw dl(RegularPolygon(n, 1.0));
    const auto cuts = breakpoints(dl.polygon());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      interior(cuts[i], cuts[i + 1], 8, [&](double t) {
        auto G = [&](double x) { return dl.cdf(x); };
        // G is a sum of O(10) terms; a wider step keeps rounding noise in the
        // difference quotient below 1e-8.
        CHECK(std::fabs(central_diff(G, t, 1e-5) - dl.pdf(t)) < 1e-6 * dl.pdf(t) + 2e-8);
      });
    }
  }
}

TEST_CASE("normalization") {
  for (int n = 3; n <= 12; ++n) {
    DistanceLaw dl(RegularPolygon(n, 1.0));
    const auto& p = dl.polygon();
    const auto seams = p.seams();
    const double mass = numerics::integrate_or_throw(
        [&](double t) { return dl.pdf(t, Side::left); }, 0.0, p.max_chord(), seams, 1e-11);
    CHECK(std::fabs(mass - 1.0) < 1e-9);
  }
}

TEST_CASE("triangle closed form") {
  for (double r : {0.5, 1.0, 2.0}) {
    DistanceLaw dl(RegularPolygon(3, r));
    const double top = std::sqrt(3.0) * r;
    for (int j = 0; j < 100; ++j) {
      const double t = top * (j + 0.5) / 100.0;
      CHECK(std::fabs(dl.pdf(t) - triangle_pdf_closed(r, t)) < 1e-10 / r);
    }
    CHECK(triangle_pdf_closed(r, 0.0) == 0.0);
    CHECK(triangle_pdf_closed(r, top) == 0.0);
    CHECK(triangle_pdf_closed(r, 2 * top) == 0.0);
    // The density is continuous at lambda.
    const double lam = 1.5 * r;
    CHECK(std::fabs(dl.pdf(lam) - dl.pdf(lam, Side::left)) < 1e-12);
    CHECK(std::fabs(triangle_pdf_closed(r, lam - 1e-12) - triangle_pdf_closed(r, lam + 1e-12)) < 1e-9);
  }
}

TEST_CASE("mean distance") {
  DistanceLaw tri(RegularPolygon(3, 1.0));
  CHECK(std::fabs(mean_distance(tri) - triangle_mean_distance(1.0)) < 1e-9);
  CHECK(triangle_mean_distance(1.0) == doctest::Approx(0.6318380067826792).epsilon(1e-15));

  // Unit square constant (2 + sqrt2 + 5 ln(1 + sqrt2)) / 15, scaled by the side.
  const double unit = (2.0 + std::sqrt(2.0) + 5.0 * std::log(1.0 + std::sqrt(2.0))) / 15.0;
  DistanceLaw sq(RegularPolygon(4, 1.0));
  CHECK(std::fabs(mean_distance(sq) - unit * std::sqrt(2.0)) < 1e-9);
  CHECK(mean_distance(sq) == doctest::Approx(0.73738).epsilon(1e-5));
}

TEST_CASE("piefke route agrees with the closed form") {
  for (int n : {3, 4, 6}) {
    DistanceLaw dl(RegularPolygon(n, 1.0));
    const double top = dl.polygon().max_chord();
    for (double f : {0.1, 0.33, 0.61, 0.87}) {
      const double t = f * top;
      CHECK(rel_err(piefke_check(dl, t), dl.pdf(t)) < 1e-5);
    }
    // Near the top of the support the tail integral vanishes.
    CHECK(std::fabs(piefke_check(dl, top * (1 - 1e-6))) < 1e-6);
    CHECK_THROWS_AS(piefke_check(dl, 0.0), InvalidParameter);
    CHECK_THROWS_AS(piefke_check(dl, top), InvalidParameter);
  }
}

TEST_CASE("small-t behaviour: g(t) ~ 2 pi t / A") {
  for (int n = 3; n <= 12; ++n) {
    DistanceLaw dl(RegularPolygon(n, 1.0));
    const double A = dl.polygon().area();
    for (double t : {1e-3, 1e-4}) {
      // The next term is -(2u/A^2) t^2.
      const double lead = 2 * pi * t / A;
      const double next = 2 * dl.polygon().perimeter() * t * t / (A * A);
      CHECK(std::fabs(dl.pdf(t) - (lead - next)) < 1e-3 * next);
    }
  }
}
