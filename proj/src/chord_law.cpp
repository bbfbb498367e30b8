#include "polygauge/chord_law.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polygauge/error.hpp"
#include "polygauge/numerics.hpp"
#include "polygauge/profile.hpp"

namespace polygauge {
namespace {

constexpr double kPi = std::numbers::pi;

double clamp_to(double a, double s, const char* who) {
  if (a > s * (1.0 + 1e-12)) {
    throw InvalidParameter(std::string(who) + ": requires a <= s");
  }
  return std::min(a, s);
}

}  // namespace

ThetaSigns ThetaSigns::flipped(int row) {
  if (row < 1 || row > 4) throw InvalidParameter("theta row must be in 1..4");
  ThetaSigns out;
  out.sign[static_cast<std::size_t>(row - 1)] = -1.0;
  return out;
}

bool ThetaSigns::identity() const {
  return std::all_of(sign.begin(), sign.end(), [](double v) { return v == 1.0; });
}

Segment segment_at(const RegularPolygon& poly, double s, Side side) {
  Segment seg;
  const auto& ell = poly.thresholds();
  if (side == Side::right) {
    seg.k = branch_index(poly, s);
    seg.above_lambda = poly.odd() && seg.k == poly.K() && s >= poly.lambda();
  } else {
    while (seg.k < poly.K() && s > ell[static_cast<std::size_t>(seg.k + 1)]) ++seg.k;
    seg.above_lambda = poly.odd() && seg.k == poly.K() && s > poly.lambda();
  }
  return seg;
}

double theta(const RegularPolygon& poly, int k, int i, double a, double b) {
  const int n = poly.n();
  if (k < 1) throw InvalidParameter("theta: requires k >= 1");
  if ((2 * k) % n == 0) {
    throw InvalidParameter("theta: 2k pi/n is a multiple of pi (k=" + std::to_string(k) + ")");
  }
  const double r = poly.r();
  const double x = kPi / n;
  const double two_k = 2.0 * k * x;
  const double csc_x = 1.0 / std::sin(x);
  const double cot_x = std::cos(x) / std::sin(x);
  const double sec_k = 1.0 / std::cos(k * x);
  const double csc_2k = 1.0 / std::sin(two_k);
  const double cot_2k = std::cos(two_k) / std::sin(two_k);
  switch (i) {
    case 1:
      return csc_x * (std::sin(2.0 * b) * csc_2k - 2.0 * b * cot_2k) / (4.0 * r);
    case 2:
      return a * (std::cos(b) * cot_x * sec_k - a / (2.0 * r) * std::sin(2.0 * b) * csc_x * csc_2k);
    case 3:
      return -(std::sin(b) * cot_x * sec_k + a / (2.0 * r) * std::cos(2.0 * b) * csc_x * csc_2k);
    case 4:
      return csc_x * cot_2k / (2.0 * r);
    default:
      break;
  }
  throw InvalidParameter("theta: row must be in 1..4");
}

std::array<double, 4> chord_basis(double s, double a) {
  if (a == 0.0) return {s, 1.0 / s, 1.0, 0.0};
  const double root = std::sqrt(std::max(0.0, s * s - a * a));
  return {s, 1.0 / s, root / s, s * std::asin(std::min(1.0, a / s))};
}

double h(const RegularPolygon& poly, int k, double s, double a, double b,
         const ThetaSigns& signs) {
  if (k == 0) return 0.0;
  if (!(s > 0.0)) throw InvalidParameter("h: requires s > 0");
  a = clamp_to(a, s, "h");
  const auto basis = chord_basis(s, a);
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    sum += signs.sign[static_cast<std::size_t>(i)] * theta(poly, k, i + 1, a, b) *
           basis[static_cast<std::size_t>(i)];
  }
  return sum;
}

ChordLaw::ChordLaw(RegularPolygon poly, ThetaSigns signs)
    : poly_(std::move(poly)), signs_(signs) {
  const int K = poly_.K();
  const double w = poly_.half_angle();
  for (int k = 0; k <= K; ++k) {
    // For even n, (K+1) pi/n = pi/2 and A_1(K) is exactly ell_K; keeping the
    // identity exact avoids a spurious sqrt(rounding) term at s = ell_K.
    const bool right_angle = !poly_.odd() && k == K;
    a1_.push_back(right_angle ? poly_.ell(k) : poly_.ell(k) * std::sin((k + 1) * w));
  }
  a2_ = poly_.lambda();
  b2_ = 0.5 * kPi * (1.0 - 1.0 / poly_.n());

  auto make = [&](int m, double a, double b, double weight) {
    HTerm t{m, a, b, weight, {}};
    for (int i = 0; i < 4; ++i) {
      t.theta[static_cast<std::size_t>(i)] =
          signs_.sign[static_cast<std::size_t>(i)] * theta(poly_, m, i + 1, a, b);
    }
    return t;
  };

  const bool even = !poly_.odd();
  for (int k = 0; k <= K; ++k) {
    std::vector<HTerm> list;
    if (k > 0) list.push_back(make(k, a1_[k], B1(k), -1.0));
    // For even n the top branch has no chord between sides i and i+K+1
    // (those sides are parallel).
    if (!(even && k == K)) list.push_back(make(k + 1, a1_[k], B1(k) + w, 1.0));
    terms_.push_back(std::move(list));
  }
  if (poly_.odd()) {
    std::vector<HTerm> list = terms_[static_cast<std::size_t>(K)];
    list.push_back(make(K + 1, a2_, b2_ + w, -1.0));
    list.push_back(make(K + 1, a2_, b2_, -1.0));
    terms_.push_back(std::move(list));
  }
}

double ChordLaw::A1(int k) const {
  if (k < 0 || k > poly_.K()) throw InvalidParameter("A1: index outside 0..K");
  return a1_[static_cast<std::size_t>(k)];
}

std::size_t ChordLaw::slot(const Segment& seg) const {
  if (seg.k < 0 || seg.k > poly_.K()) throw InvalidParameter("segment index outside 0..K");
  if (seg.above_lambda) {
    if (!poly_.odd() || seg.k != poly_.K()) {
      throw InvalidParameter("the lambda piece exists only for the odd-n top branch");
    }
    return static_cast<std::size_t>(poly_.K() + 1);
  }
  return static_cast<std::size_t>(seg.k);
}

std::span<const HTerm> ChordLaw::terms(const Segment& seg) const { return terms_[slot(seg)]; }

double ChordLaw::branch(const Segment& seg, double s) const {
  if (!(s > 0.0)) throw InvalidParameter("branch: requires s > 0");
  double value = 1.0;
  for (const HTerm& t : terms(seg)) {
    const auto basis = chord_basis(s, clamp_to(t.a, s, "branch"));
    double hv = 0.0;
    for (std::size_t i = 0; i < 4; ++i) hv += t.theta[i] * basis[i];
    value += t.weight * hv;
  }
  return value;
}

double ChordLaw::cdf(double s, Side side) const {
  if (s <= 0.0) return 0.0;
  const double top = poly_.max_chord();
  if (s > top || (s == top && side == Side::right)) return 1.0;
  return branch(segment_at(poly_, s, side), s);
}

double cdf_chord(const ChordLaw& law, double s, Side side) { return law.cdf(s, side); }

double linear_slope(const RegularPolygon& poly) {
  const double x = poly.half_angle();
  const double cot = std::cos(x) / std::sin(x);
  return ((1.0 - x * cot) / std::sin(x) + x / std::cos(x)) / (4.0 * poly.r());
}

double cdf_chord_linear(const ChordLaw& law, double s) {
  const RegularPolygon& poly = law.polygon();
  const double limit = poly.n() == 3 ? poly.lambda() : poly.ell(1);
  if (!(s >= 0.0 && s <= limit)) {
    throw InvalidParameter("cdf_chord_linear: s outside the linear range");
  }
  return linear_slope(poly) * s;
}

std::vector<double> breakpoints(const RegularPolygon& poly) {
  std::vector<double> out = poly.thresholds();
  if (poly.odd()) out.push_back(poly.lambda());
  std::sort(out.begin(), out.end());
  return out;
}

double pdf_chord_numeric(const ChordLaw& law, double s, double step) {
  if (!(step > 0.0)) throw InvalidParameter("pdf_chord_numeric: step must be positive");
  for (double x : breakpoints(law.polygon())) {
    if (x > s - step && x < s + step) {
      throw InvalidParameter("pdf_chord_numeric: stencil straddles a breakpoint");
    }
  }
  return numerics::central_diff([&](double x) { return law.cdf(x); }, s, step);
}

double mean_chord_stieltjes(const ChordLaw& law, double tol) {
  const RegularPolygon& poly = law.polygon();
  const double top = poly.max_chord();
  const std::vector<double> cuts = poly.seams();
  // Left-limit evaluation keeps each panel on a single branch formula.
  const double area_under_F =
      numerics::integrate_or_throw([&](double s) { return law.cdf(s, Side::left); }, 0.0, top,
                                   cuts, tol);
  return top - area_under_F;
}

double mean_chord(const RegularPolygon& poly) {
  return kPi * poly.area() / poly.perimeter();
}

}  // namespace polygauge
