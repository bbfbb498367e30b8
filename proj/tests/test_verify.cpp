#include <algorithm>
#include <string>

#include "doctest.h"
#include "polygauge/verify.hpp"

using namespace polygauge;
using namespace polygauge::verify;

namespace {

int count_failed(const std::vector<CheckResult>& rs) {
  return static_cast<int>(std::count_if(rs.begin(), rs.end(), [](const CheckResult& c) {
    return !c.passed && !c.skipped;
  }));
}

}  // namespace

TEST_CASE("suite passes and skips Monte Carlo below the sample minimum") {
  Options opt;
  opt.n_min = 3;
  opt.n_max = 6;
  opt.samples = 100;
  const auto results = run_suite(opt);
  CHECK(count_failed(results) == 0);
  int skipped = 0;
  for (const auto& c : results) {
    if (c.name.rfind("mc_", 0) == 0) {
      CHECK(c.skipped);
      ++skipped;
    }
  }
  CHECK(skipped == 2 * 4);
}

TEST_CASE("suite catches a corrupted theta row") {
  for (int row : {1, 3, 4}) {
    Options opt;
    opt.n_min = 5;
    opt.n_max = 5;
    opt.samples = 100;
    opt.signs = ThetaSigns::flipped(row);
    CHECK(count_failed(run_suite(opt)) > 0);
  }
}

TEST_CASE("individual gaps") {
  DistanceLaw dl(RegularPolygon(7, 1.0));
  CHECK(quadrature_gap(dl.chord_law(), 20) < 1e-8);
  const auto rt = geometric_roundtrip(dl.polygon(), 400, 1);
  CHECK(rt.checked >= 200);
  CHECK(rt.max_error < 1e-9);
  const auto jumps = seam_jumps(dl);
  CHECK(jumps.F < 1e-12);
  CHECK(jumps.G < 1e-12);
  CHECK(jumps.g < 1e-10);
  CHECK(linear_gap(dl.chord_law()) < 1e-12);
  CHECK(normalization_gap(dl) < 1e-6);
  CHECK(mean_chord_gap(dl.chord_law()) < 1e-6);
  CHECK(piefke_gap(dl, 8) < 1e-5);
}
