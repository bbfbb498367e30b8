#include "polygauge/distance_law.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polygauge/error.hpp"
#include "polygauge/numerics.hpp"

namespace polygauge {
namespace {

constexpr double kPi = std::numbers::pi;

double checked_a(double a, double t, const char* who) {
  if (a > t * (1.0 + 1e-12)) throw InvalidParameter(std::string(who) + ": requires a <= t");
  return std::min(a, t);
}

// sum_i theta_i basis_i with the zero-coefficient guard on the log term.
double combine(const std::array<double, 4>& theta, const std::array<double, 4>& basis, double a) {
  if (a == 0.0 && theta[1] != 0.0) {
    throw std::logic_error("theta_2 must vanish when a = 0");
  }
  double sum = theta[0] * basis[0] + theta[2] * basis[2] + theta[3] * basis[3];
  if (a != 0.0) sum += theta[1] * basis[1];
  return sum;
}

std::array<double, 4> theta_row(const RegularPolygon& poly, int k, double a, double b,
                                const ThetaSigns& signs) {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    out[static_cast<std::size_t>(i)] =
        signs.sign[static_cast<std::size_t>(i)] * theta(poly, k, i + 1, a, b);
  }
  return out;
}

}  // namespace

std::array<double, 4> star_basis(double t, double a) {
  if (a == 0.0) return {0.5 * t * t, std::log(t), t, 0.0};
  const double root = std::sqrt(std::max(0.0, t * t - a * a));
  const double as = std::asin(std::min(1.0, a / t));
  return {0.5 * t * t, std::log(t), root + a * as, 0.5 * (a * root + t * t * as)};
}

std::array<double, 4> ring_basis(double t, double a) {
  const double t2 = t * t;
  const double l2 = 0.25 * t2 * (2.0 * std::log(t) - 1.0);
  if (a == 0.0) return {0.125 * t2 * t2, l2, t2 * t / 3.0, 0.0};
  const double root = std::sqrt(std::max(0.0, t2 - a * a));
  const double root3 = root * root * root;
  const double as = std::asin(std::min(1.0, a / t));
  return {0.125 * t2 * t2, l2, root3 / 3.0 + 0.5 * a * (a * root + t2 * as),
          0.125 * (5.0 * a / 3.0 * root3 + a * a * a * root + t2 * t2 * as)};
}

double h_star(const RegularPolygon& poly, int k, double t, double a, double b,
              const ThetaSigns& signs) {
  if (k == 0 || t == 0.0) return 0.0;
  if (!(t > 0.0)) throw InvalidParameter("h_star: requires t >= 0");
  a = checked_a(a, t, "h_star");
  return combine(theta_row(poly, k, a, b, signs), star_basis(t, a), a);
}

double h_ring(const RegularPolygon& poly, int k, double t, double a, double b,
              const ThetaSigns& signs) {
  if (k == 0 || t == 0.0) return 0.0;
  if (!(t > 0.0)) throw InvalidParameter("h_ring: requires t >= 0");
  a = checked_a(a, t, "h_ring");
  return combine(theta_row(poly, k, a, b, signs), ring_basis(t, a), a);
}

DistanceLaw::DistanceLaw(ChordLaw law) : law_(std::move(law)) {
  const RegularPolygon& poly = law_.polygon();
  const int K = poly.K();
  if (poly.odd()) {
    const double w = poly.half_angle();
    c_lambda_ = h_star(poly, K + 1, poly.lambda(), law_.A2(), law_.B2() + w, law_.signs()) +
                h_star(poly, K + 1, poly.lambda(), law_.A2(), law_.B2(), law_.signs());
  }
  double jsum = 0.0;
  double ksum = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double lo = poly.ell(k);
    const double hi = poly.ell(k + 1);
    const Segment start{k, false};
    const Segment end = segment_at(poly, hi, Side::left);
    const double hs_lo = H_star(start, lo);
    const double hr_lo = H_ring(start, lo);
    jstar_prefix_.push_back(jsum);
    kring_prefix_.push_back(ksum);
    hstar_at_start_.push_back(hs_lo);
    hring_at_start_.push_back(hr_lo);
    const double k_end = 0.5 * (hi * hi - lo * lo) * (jsum - hs_lo) + H_ring(end, hi) - hr_lo;
    jsum += H_star(end, hi) - hs_lo;
    ksum += k_end;
  }
}

double DistanceLaw::tower(const Segment& seg, double t, bool ring) const {
  double value = ring ? t * t * t / 3.0 : t;
  if (t == 0.0) return value;
  for (const HTerm& term : law_.terms(seg)) {
    const double a = checked_a(term.a, t, "distance law");
    const auto basis = ring ? ring_basis(t, a) : star_basis(t, a);
    value += term.weight * combine(term.theta, basis, a);
  }
  if (seg.above_lambda) value += ring ? 0.5 * t * t * c_lambda_ : c_lambda_;
  return value;
}

double DistanceLaw::H_star(const Segment& seg, double t) const { return tower(seg, t, false); }
double DistanceLaw::H_ring(const Segment& seg, double t) const { return tower(seg, t, true); }

double DistanceLaw::H_star(int k, double t) const {
  const RegularPolygon& poly = polygon();
  if (k < 0 || k > poly.K()) throw InvalidParameter("H_star: branch index outside 0..K");
  const double slack = 1e-12 * poly.r();
  if (!(t >= poly.ell(k) - slack && t <= poly.ell(k + 1) + slack)) {
    throw InvalidParameter("H_star: t outside [ell_k, ell_{k+1}]");
  }
  return H_star(Segment{k, poly.odd() && k == poly.K() && t >= poly.lambda()}, t);
}

double DistanceLaw::H_ring(int k, double t) const {
  const RegularPolygon& poly = polygon();
  if (k < 0 || k > poly.K()) throw InvalidParameter("H_ring: branch index outside 0..K");
  const double slack = 1e-12 * poly.r();
  if (!(t >= poly.ell(k) - slack && t <= poly.ell(k + 1) + slack)) {
    throw InvalidParameter("H_ring: t outside [ell_k, ell_{k+1}]");
  }
  return H_ring(Segment{k, poly.odd() && k == poly.K() && t >= poly.lambda()}, t);
}

double DistanceLaw::phi_star(double t, Side side) const {
  if (t <= 0.0) return 0.0;
  const Segment seg = segment_at(polygon(), t, side);
  const auto k = static_cast<std::size_t>(seg.k);
  return jstar_prefix_[k] + H_star(seg, t) - hstar_at_start_[k];
}

double DistanceLaw::phi_ring(double t, Side side) const {
  if (t <= 0.0) return 0.0;
  const Segment seg = segment_at(polygon(), t, side);
  const auto k = static_cast<std::size_t>(seg.k);
  const double lo = polygon().ell(seg.k);
  return kring_prefix_[k] + 0.5 * (t * t - lo * lo) * (jstar_prefix_[k] - hstar_at_start_[k]) +
         H_ring(seg, t) - hring_at_start_[k];
}

double DistanceLaw::pdf(double t, Side side) const {
  const double top = polygon().max_chord();
  if (t <= 0.0 || t > top || (t == top && side == Side::right)) return 0.0;
  const double A = polygon().area();
  const double u = polygon().perimeter();
  return 2.0 * t / A * (kPi + u / A * (phi_star(t, side) - t));
}

double DistanceLaw::cdf(double t, Side side) const {
  const double top = polygon().max_chord();
  if (t <= 0.0) return 0.0;
  if (t > top || (t == top && side == Side::right)) return 1.0;
  const double A = polygon().area();
  const double u = polygon().perimeter();
  return (t * t * (kPi - 2.0 * u / (3.0 * A) * t) + 2.0 * u / A * phi_ring(t, side)) / A;
}

double pdf_distance(const DistanceLaw& law, double t) { return law.pdf(t); }
double cdf_distance(const DistanceLaw& law, double t) { return law.cdf(t); }

double mean_distance(const DistanceLaw& law, double tol) {
  const RegularPolygon& poly = law.polygon();
  const std::vector<double> cuts = poly.seams();
  return numerics::integrate_or_throw([&](double t) { return t * law.pdf(t, Side::left); }, 0.0,
                                      poly.max_chord(), cuts, tol);
}

double triangle_pdf_closed(double r, double t) {
  if (!(r > 0.0)) throw InvalidParameter("triangle_pdf_closed: requires r > 0");
  const double s3 = std::sqrt(3.0);
  if (t <= 0.0 || t >= s3 * r) return 0.0;
  const double u = 3.0 * s3 * r;
  const double A = 0.75 * s3 * r * r;
  double phi = 0.0;
  if (t < 1.5 * r) {
    phi = (3.0 * s3 + 2.0 * kPi) * t * t / (36.0 * r);
  } else {
    const double ratio = 1.5 * r / t;
    phi = 1.5 * (t * std::sqrt(std::max(0.0, 1.0 - ratio * ratio)) - 0.5 * kPi * r) +
          (1.0 / (4.0 * s3) - kPi / 9.0) * t * t / r +
          (1.5 * r + t * t / (3.0 * r)) * std::asin(std::min(1.0, ratio));
  }
  return 2.0 * t / A * (kPi + u / A * (phi - t));
}

double triangle_mean_distance(double r) {
  return std::sqrt(3.0) * r / 20.0 * (4.0 + 3.0 * std::log(3.0));
}

double piefke_check(const DistanceLaw& law, double t, double tol) {
  const RegularPolygon& poly = law.polygon();
  const ChordLaw& chord = law.chord_law();
  const double top = poly.max_chord();
  if (!(t > 0.0 && t < top)) throw InvalidParameter("piefke_check: requires 0 < t < ell_{K+1}");

  std::vector<double> knots{t};
  for (double x : breakpoints(poly)) {
    if (x > t && x < top) knots.push_back(x);
  }
  knots.push_back(top);

  const auto F = [&](double s) { return chord.cdf(s, Side::left); };
  const double fd_step = 1e-6 * poly.r();
  const std::size_t panels = knots.size() - 1;
  const double panel_tol = tol / static_cast<double>(3 * panels);

  double tail = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    const double strip = 0.05 * (b - a);
    const double a_in = a + strip;
    const double b_in = b - strip;
    // Stieltjes strips: integral (s - t) dF = [(s - t) F] - integral F.
    const double fa = chord.cdf(a, Side::right);
    const double fb = chord.cdf(b, Side::left);
    const double fa_in = F(a_in);
    const double fb_in = F(b_in);
    tail += (a_in - t) * fa_in - (a - t) * fa -
            numerics::integrate_or_throw(F, a, a_in, {}, panel_tol);
    tail += (b - t) * fb - (b_in - t) * fb_in -
            numerics::integrate_or_throw(F, b_in, b, {}, panel_tol);
    // Interior: (s - t) f(s) with f from central differences of F.
    const double h = std::min(fd_step, 0.25 * strip);
    const auto integrand = [&](double s) {
      return (s - t) * (F(s + h) - F(s - h)) / (2.0 * h);
    };
    const numerics::QuadratureResult mid =
        numerics::integrate(integrand, a_in, b_in, std::max(panel_tol, 1e-9 * (b - a)));
    tail += mid.value;
  }
  const double A = poly.area();
  return 2.0 * poly.perimeter() * t / (A * A) * tail;
}

}  // namespace polygauge
