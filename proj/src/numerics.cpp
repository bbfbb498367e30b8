#include "polygauge/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "polygauge/error.hpp"

namespace polygauge::numerics {
namespace {

// Kronrod 15-point nodes (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

Panel kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kron = fc * kWk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXk[j];
    const double sum = f(center - dx) + f(center + dx);
    kron += kWk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {kron * half, std::abs((kron - gauss) * half)};
}

struct Node {
  double a;
  double b;
  Panel panel;
  int depth;
  bool operator<(const Node& other) const { return panel.error < other.panel.error; }
};

constexpr int kMaxPanels = 1 << 15;

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("integrate: tol must be positive");
  if (!(a <= b)) throw InvalidParameter("integrate: requires a <= b");
  if (a == b) return {0.0, 0.0, 0, true};

  // Global adaptive scheme: always bisect the panel with the largest error
  // estimate until the summed estimate meets tol.
  std::priority_queue<Node> heap;
  std::vector<Node> settled;
  const Panel whole = kronrod(f, a, b);
  heap.push({a, b, whole, 0});
  double total_error = whole.error;
  int panels = 1;
  while (total_error > tol && !heap.empty() && panels < kMaxPanels) {
    const Node worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.depth >= kMaxQuadratureDepth || mid <= worst.a || mid >= worst.b) {
      settled.push_back(worst);
      continue;
    }
    const Panel left = kronrod(f, worst.a, mid);
    const Panel right = kronrod(f, mid, worst.b);
    total_error += left.error + right.error - worst.panel.error;
    heap.push({worst.a, mid, left, worst.depth + 1});
    heap.push({mid, worst.b, right, worst.depth + 1});
    ++panels;
  }

  std::vector<Node> all = std::move(settled);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  // Small contributions first.
  std::sort(all.begin(), all.end(), [](const Node& x, const Node& y) {
    return std::abs(x.panel.value) < std::abs(y.panel.value);
  });
  QuadratureResult out{0.0, 0.0, panels, true};
  for (const Node& node : all) {
    out.value += node.panel.value;
    out.error_estimate += node.panel.error;
  }
  out.converged = out.error_estimate <= tol;
  return out;
}

QuadratureResult integrate_split(const Integrand& f, double a, double b,
                                 std::span<const double> cuts, double tol) {
  std::vector<double> points{a, b};
  for (double c : cuts) {
    if (c > a && c < b) points.push_back(c);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const double panel_tol = tol / static_cast<double>(points.size() - 1);
  QuadratureResult total{0.0, 0.0, 0, true};
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const QuadratureResult part = integrate(f, points[i], points[i + 1], panel_tol);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.panels += part.panels;
    total.converged = total.converged && part.converged;
  }
  return total;
}

double integrate_or_throw(const Integrand& f, double a, double b,
                          std::span<const double> cuts, double tol) {
  const QuadratureResult result = integrate_split(f, a, b, cuts, tol);
  if (!result.converged) {
    throw QuadratureError("quadrature did not converge: error estimate " +
                          std::to_string(result.error_estimate) + " > " + std::to_string(tol));
  }
  return result.value;
}

double central_diff(const Integrand& f, double x, double h) {
  if (!(h > 0.0)) throw InvalidParameter("central_diff: step must be positive");
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double bisect(const Integrand& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw InvalidParameter("bisect: root is not bracketed");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace polygauge::numerics
