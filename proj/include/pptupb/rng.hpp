#pragma once

#include <cstdint>
#include <random>

#include "pptupb/types.hpp"

namespace pptupb {

// Uniform in (0,1), never hitting the endpoints. Derived from the top 53 bits
// of the engine output so the value stream does not depend on the standard
// library's distribution implementations.
double uniform01(std::mt19937_64& rng);

// Standard complex Gaussian via Box-Muller (E|z|^2 = 1).
cxd complex_gaussian(std::mt19937_64& rng);

// Complex-Gaussian direction, normalized.
Vec3 random_unit_vec3(std::mt19937_64& rng);

}  // namespace pptupb
