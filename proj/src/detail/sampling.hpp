#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mnconvex::detail {

// Seeded uniform stream. Bit-reproducible across platforms: mt19937_64 is
// fully specified and the double conversion is done by hand.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mnconvex::detail
