#include "polygauge/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "polygauge/error.hpp"

namespace polygauge::mc {
namespace {

constexpr std::size_t kStreamBlock = 1u << 16;

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(RngSeed seed, std::uint64_t stream_index) {
  const std::uint64_t a = splitmix64(seed.seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(stream_index + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  engine_.seed(seq);
}

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double sample_chord(const RegularPolygon& poly, RandomStream& rng) {
  for (;;) {
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const double p = poly.r() * rng.uniform();
    const double len = chord_length(poly, Line{p, phi});
    if (len > 0.0) return len;
  }
}

Point sample_point(const RegularPolygon& poly, RandomStream& rng) {
  const auto& v = poly.vertices();
  const auto n = static_cast<std::uint64_t>(poly.n());
  const std::size_t i = static_cast<std::size_t>(rng.next() % n);
  const Point& v1 = v[i];
  const Point& v2 = v[(i + 1) % v.size()];
  const double su = std::sqrt(rng.uniform());
  const double w = rng.uniform();
  // V0 is the centre, so its term vanishes.
  return {su * ((1.0 - w) * v1.x + w * v2.x), su * ((1.0 - w) * v1.y + w * v2.y)};
}

double sample_pair_distance(const RegularPolygon& poly, RandomStream& rng) {
  const Point a = sample_point(poly, rng);
  const Point b = sample_point(poly, rng);
  return std::hypot(a.x - b.x, a.y - b.y);
}

Point sample_disk_point(double r, RandomStream& rng) {
  const double rho = r * std::sqrt(rng.uniform());
  const double ang = 2.0 * std::numbers::pi * rng.uniform();
  return {rho * std::cos(ang), rho * std::sin(ang)};
}

std::vector<double> draw(const RegularPolygon& poly, SampleKind kind, std::size_t count,
                         RngSeed seed, unsigned threads) {
  std::vector<double> out(count);
  const std::size_t blocks = (count + kStreamBlock - 1) / kStreamBlock;
  auto fill_block = [&](std::size_t b) {
    RandomStream rng(seed, b);
    const std::size_t lo = b * kStreamBlock;
    const std::size_t hi = std::min(count, lo + kStreamBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      out[i] = kind == SampleKind::chord ? sample_chord(poly, rng) : sample_pair_distance(poly, rng);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(blocks, 1))));
  if (threads == 1) {
    for (std::size_t b = 0; b < blocks; ++b) fill_block(b);
    return out;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t b = w; b < blocks; b += threads) fill_block(b);
    });
  }
  workers.clear();
  return out;
}

unsigned threads_from_env() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("POLYGAUGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw InvalidParameter("EmpiricalCdf needs at least one sample");
  std::sort(samples_.begin(), samples_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
  return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalCdf::mean() const {
  double sum = 0.0;
  for (double x : samples_) sum += x;
  return sum / static_cast<double>(samples_.size());
}

EmpiricalCdf EmpiricalCdf::merge(const EmpiricalCdf& lhs, const EmpiricalCdf& rhs) {
  std::vector<double> all;
  all.reserve(lhs.size() + rhs.size());
  std::merge(lhs.samples_.begin(), lhs.samples_.end(), rhs.samples_.begin(), rhs.samples_.end(),
             std::back_inserter(all));
  return EmpiricalCdf(std::move(all));
}

double ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& analytic) {
  const auto xs = emp.samples();
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = analytic(xs[i]);
    const double above = static_cast<double>(i + 1) / n;
    const double below = static_cast<double>(i) / n;
    worst = std::max({worst, std::abs(above - f), std::abs(below - f)});
  }
  return worst;
}

}  // namespace polygauge::mc
