#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

// Fixed standard-normal generator so stochastic runs reproduce bit-for-bit on
// a given platform: mt19937_64 raw draws mapped to [0,1) by taking the top 53
// bits, turned into normals by Box-Muller,
//   z0 = sqrt(-2 ln u1) cos(2 pi u2),  z1 = sqrt(-2 ln u1) sin(2 pi u2),
// emitted in that order. std::normal_distribution is implementation-defined
// and must not be used anywhere seeded output is persisted.

namespace helix {

class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = to_unit(engine_());
    } while (u1 <= 0.0);
    const double u2 = to_unit(engine_());
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Uniform in [0,1) from the top 53 bits.
  static double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace helix
