#include "pptupb/rng.hpp"

#include <cmath>
#include <numbers>

namespace pptupb {

double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

cxd complex_gaussian(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

Vec3 random_unit_vec3(std::mt19937_64& rng) {
  Vec3 v;
  do {
    for (int k = 0; k < 3; ++k) v(k) = complex_gaussian(rng);
  } while (v.norm() < 1e-8);
  return v.normalized();
}

}  // namespace pptupb
