#include "polygauge/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polygauge/error.hpp"
#include "polygauge/numerics.hpp"

namespace polygauge {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRelSlack = 1e-12;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void check_s_range(const RegularPolygon& poly, int k, double s, const char* who) {
  if (k < 0 || k > poly.K()) {
    throw InvalidParameter(std::string(who) + ": branch index " + std::to_string(k) +
                           " outside 0..K");
  }
  const double slack = kRelSlack * poly.r();
  if (!(s >= poly.ell(k) - slack && s <= poly.ell(k + 1) + slack)) {
    throw InvalidParameter(std::string(who) + ": s=" + std::to_string(s) +
                           " outside [ell_k, ell_{k+1}] for k=" + std::to_string(k));
  }
}

// True for the odd-n top branch with s >= lambda (four-piece profile).
bool windowed(const RegularPolygon& poly, int k, double s) {
  return poly.odd() && k == poly.K() && s >= poly.lambda();
}

}  // namespace

int branch_index(const RegularPolygon& poly, double s) {
  const auto& ell = poly.thresholds();
  int k = 0;
  while (k < poly.K() && s >= ell[static_cast<std::size_t>(k + 1)]) ++k;
  return k;
}

double q(const RegularPolygon& poly, int k, double s, double psi) {
  if (k < 1 || k > poly.K() + 1) {
    throw InvalidParameter("q: index k=" + std::to_string(k) + " outside 1..K+1");
  }
  const double x = k * poly.half_angle();
  const double c = std::cos(psi);
  const double sn = std::sin(psi);
  return poly.apothem() / std::cos(x) * c -
         0.5 * s * (std::tan(x) * c * c - sn * sn / std::tan(x));
}

double alpha(const RegularPolygon& poly, int k, double s) {
  if (k < 1 || k > poly.K()) {
    throw InvalidParameter("alpha: index k=" + std::to_string(k) + " outside 1..K");
  }
  check_s_range(poly, k, s, "alpha");
  if (!(s > 0.0)) throw InvalidParameter("alpha: requires s > 0");
  const double w = poly.half_angle();
  // 2r sin(k pi/n) sin((k+1) pi/n) / s, written through ell_k so that the
  // argument is exactly 1 at s = ell_k when (k+1) pi/n = pi/2.
  const double arg = poly.ell(k) * std::sin((k + 1) * w) / s;
  return std::asin(clamp_unit(arg)) - k * w;
}

double beta(const RegularPolygon& poly, double s) {
  if (!poly.odd()) throw InvalidParameter("beta: defined for odd n only");
  const double slack = kRelSlack * poly.r();
  if (!(s >= poly.lambda() - slack && s <= poly.max_chord() + slack)) {
    throw InvalidParameter("beta: s outside [lambda, ell_{K+1}]");
  }
  // 2 r cos^2(pi/2n) / s is lambda / s, exactly 1 at s = lambda.
  return poly.half_angle() / 2.0 - std::acos(clamp_unit(poly.lambda() / s));
}

ProfileBranch profile_branch(const RegularPolygon& poly, int k, double s, double psi) {
  check_s_range(poly, k, s, "d_star");
  const double w = poly.half_angle();
  if (!(psi >= -kRelSlack && psi <= 2.0 * w + kRelSlack)) {
    throw InvalidParameter("d_star: psi outside [0, 2pi/n]");
  }
  if (psi > w) psi = 2.0 * w - psi;

  if (windowed(poly, k, s)) {
    // alpha_0 = 0 when K = 0 (triangle): the q_K piece is empty.
    const double a = k == 0 ? 0.0 : alpha(poly, k, s);
    const double b = beta(poly, s);
    if (psi < a) return {BranchKind::qk, k};
    if (psi <= b || psi >= w - b) return {BranchKind::qk_shifted, k + 1};
    return {BranchKind::zero, k};
  }
  if (k == 0) return {BranchKind::qk_shifted, 1};
  const double a = alpha(poly, k, s);
  if (psi <= a) return {BranchKind::qk, k};
  if (!poly.odd() && k == poly.K()) return {BranchKind::zero, k};
  return {BranchKind::qk_shifted, k + 1};
}

double d_star(const RegularPolygon& poly, int k, double s, double psi) {
  const ProfileBranch br = profile_branch(poly, k, s, psi);
  const double w = poly.half_angle();
  if (psi > w) psi = 2.0 * w - psi;
  switch (br.kind) {
    case BranchKind::qk:
      return q(poly, br.k, s, psi);
    case BranchKind::qk_shifted:
      return q(poly, br.k, s, psi - w);
    case BranchKind::zero:
      break;
  }
  return 0.0;
}

double d(const RegularPolygon& poly, int k, double s, double phi) {
  const double period = 2.0 * poly.half_angle();
  double x = std::fmod(phi + (k + 1) * poly.half_angle(), 2.0 * kPi);
  if (x < 0.0) x += 2.0 * kPi;
  const double delta = std::floor(poly.n() * x / (2.0 * kPi)) * period;
  const double psi = std::clamp(x - delta, 0.0, period);
  return d_star(poly, k, s, psi);
}

double d(const RegularPolygon& poly, double s, double phi) {
  return d(poly, branch_index(poly, s), s, phi);
}

std::vector<double> profile_kinks(const RegularPolygon& poly, int k, double s) {
  check_s_range(poly, k, s, "profile_kinks");
  std::vector<double> out;
  if (k >= 1 && s > 0.0) out.push_back(alpha(poly, k, s));
  if (windowed(poly, k, s)) {
    const double b = beta(poly, s);
    out.push_back(b);
    out.push_back(poly.half_angle() - b);
  }
  return out;
}

double mu_numeric(const RegularPolygon& poly, int k, double s, double tol) {
  const std::vector<double> cuts = profile_kinks(poly, k, s);
  const auto f = [&](double psi) { return d_star(poly, k, s, psi); };
  const double half = numerics::integrate_or_throw(f, 0.0, poly.half_angle(), cuts, tol);
  return 2.0 * poly.n() * half;
}

}  // namespace polygauge
