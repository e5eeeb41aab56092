#pragma once

#include <array>
#include <vector>

#include "pptupb/upb.hpp"

namespace pptupb {

// Squared-parameter coordinates (alpha, beta, gamma, delta) = (a^2, b^2, c^2, d^2).
struct ParamPoint {
  double alpha, beta, gamma, delta;
};

ParamPoint to_param_point(const UpbParams& p);
UpbParams to_upb_params(const ParamPoint& p);

// Generator actions of the order-60 reordering group on the parameter space.
// Each maps positive points to positive points.
ParamPoint cyclic_shift(const ParamPoint& p);  // order 5
ParamPoint inversion(const ParamPoint& p);     // order 2
ParamPoint swap_sixth(const ParamPoint& p);    // order 2, exchanges alpha <-> gamma

enum class Generator { kCyclicShift, kInversion, kSwapSixth };

ParamPoint apply_generator(Generator g, const ParamPoint& p);

// Group elements are identified by their action on a fixed probe set, not by
// their generator word (the same element has many words).
struct GroupElement {
  std::vector<Generator> word;             // applied left to right
  std::array<ParamPoint, 5> probe_images;  // cached action on probe_points()

  ParamPoint apply(const ParamPoint& p) const;
};

const std::array<ParamPoint, 5>& probe_points();

bool same_action(const GroupElement& g, const GroupElement& h, double rel_tol = 1e-9);

// Closure of the given generators under composition (breadth-first, identity
// first, deterministic order). Throws std::logic_error if closure is not
// reached within 10000 compositions.
std::vector<GroupElement> generate_group(const std::vector<Generator>& generators);

// Closure of all three generators: exactly 60 elements.
std::vector<GroupElement> generate_group();

// Cached full group, built on first use.
const std::vector<GroupElement>& symmetry_group();

// Lexicographically smallest tuple among the 60 orbit images, compared
// componentwise with relative tolerance 1e-9 for ties.
ParamPoint canonical_representative(const ParamPoint& p);
UpbParams canonical_parameters(const UpbParams& p);

}  // namespace pptupb
