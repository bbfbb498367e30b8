#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace testing {

// Small deterministic generator for property tests. Every property runs from
// a fixed seed so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 0x5eedULL) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double angle() { return uniform(0.0, 2.0 * 3.141592653589793); }

 private:
  std::mt19937_64 engine_;
};

inline double rel_err(double got, double want) {
  double scale = std::fabs(want);
  return scale > 0.0 ? std::fabs(got - want) / scale : std::fabs(got);
}

}  // namespace testing
