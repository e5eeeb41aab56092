#include "pptupb/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace pptupb {

ParamPoint to_param_point(const UpbParams& p) {
  validate(p);
  return {p.a * p.a, p.b * p.b, p.c * p.c, p.d * p.d};
}

UpbParams to_upb_params(const ParamPoint& p) {
  return {std::sqrt(p.alpha), std::sqrt(p.beta), std::sqrt(p.gamma), std::sqrt(p.delta)};
}

// Moving the last member to the front of the cycle. Period 5.
ParamPoint cyclic_shift(const ParamPoint& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
  return {be / (1.0 + al),
          be / (al * (1.0 + al)),
          1.0 / (ga + de),
          ga * (1.0 + ga + de) / (de * (ga + de))};
}

// Reversing the cycle while fixing the first member. Involution.
ParamPoint inversion(const ParamPoint& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
  return {al, al * (1.0 + al) / be, ga, ga * (1.0 + ga) / de};
}

// Exchanging the excluded member with the set: the new front is the product
// vector the other five single out. Involution; swaps alpha and gamma.
ParamPoint swap_sixth(const ParamPoint& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
  const double beta_num = be * (1.0 + ga) * ((al + be) * (ga + de) + de);
  const double beta_den =
      al * (1.0 + al + be) * de + (1.0 + al) * (al + be) * (1.0 + ga);
  const double delta_num =
      (1.0 + al) * (be * de + (al + be) * ga * (1.0 + ga + de));
  const double delta_den = (1.0 + al + (1.0 + al + be) * (ga + de)) * de;
  return {ga, beta_num / beta_den, al, delta_num / delta_den};
}

ParamPoint apply_generator(Generator g, const ParamPoint& p) {
  switch (g) {
    case Generator::kCyclicShift: return cyclic_shift(p);
    case Generator::kInversion: return inversion(p);
    case Generator::kSwapSixth: return swap_sixth(p);
  }
  throw std::logic_error("apply_generator: unknown generator");
}

ParamPoint GroupElement::apply(const ParamPoint& p) const {
  ParamPoint out = p;
  for (Generator g : word) out = apply_generator(g, out);
  return out;
}

const std::array<ParamPoint, 5>& probe_points() {
  static const std::array<ParamPoint, 5> probes = {{
      {1.37, 0.58, 2.11, 0.83},
      {0.49, 1.91, 0.72, 1.24},
      {2.45, 0.91, 0.33, 1.57},
      {0.77, 1.13, 1.83, 0.41},
      {1.05, 2.67, 0.61, 0.95},
  }};
  return probes;
}

namespace {

bool close_rel(double x, double y, double rel_tol) {
  return std::abs(x - y) <= rel_tol * std::max(std::abs(x), std::abs(y));
}

bool same_point(const ParamPoint& x, const ParamPoint& y, double rel_tol) {
  return close_rel(x.alpha, y.alpha, rel_tol) && close_rel(x.beta, y.beta, rel_tol) &&
         close_rel(x.gamma, y.gamma, rel_tol) && close_rel(x.delta, y.delta, rel_tol);
}

bool same_images(const std::array<ParamPoint, 5>& x, const std::array<ParamPoint, 5>& y,
                 double rel_tol) {
  for (int k = 0; k < 5; ++k)
    if (!same_point(x[k], y[k], rel_tol)) return false;
  return true;
}

// True when x precedes y lexicographically; components within 1e-9 relative
// are treated as ties.
bool lex_less_with_ties(const ParamPoint& x, const ParamPoint& y) {
  constexpr double tie_tol = 1e-9;
  const double xs[4] = {x.alpha, x.beta, x.gamma, x.delta};
  const double ys[4] = {y.alpha, y.beta, y.gamma, y.delta};
  for (int k = 0; k < 4; ++k) {
    if (close_rel(xs[k], ys[k], tie_tol)) continue;
    return xs[k] < ys[k];
  }
  return false;
}

}  // namespace

bool same_action(const GroupElement& g, const GroupElement& h, double rel_tol) {
  return same_images(g.probe_images, h.probe_images, rel_tol);
}

std::vector<GroupElement> generate_group(const std::vector<Generator>& generators) {
  std::vector<GroupElement> elements;
  GroupElement identity;
  identity.probe_images = probe_points();
  elements.push_back(identity);

  int compositions = 0;
  for (std::size_t next = 0; next < elements.size(); ++next) {
    // elements[next] is copied: pushing back may reallocate the vector.
    const GroupElement current = elements[next];
    for (Generator g : generators) {
      if (++compositions > 10000)
        throw std::logic_error(
            "generate_group: closure not reached within 10000 compositions");
      GroupElement composed;
      composed.word = current.word;
      composed.word.push_back(g);
      for (int k = 0; k < 5; ++k)
        composed.probe_images[k] = apply_generator(g, current.probe_images[k]);
      bool known = false;
      for (const auto& existing : elements) {
        if (same_action(existing, composed)) {
          known = true;
          break;
        }
      }
      if (!known) elements.push_back(composed);
    }
  }
  return elements;
}

std::vector<GroupElement> generate_group() {
  return generate_group(
      {Generator::kCyclicShift, Generator::kInversion, Generator::kSwapSixth});
}

const std::vector<GroupElement>& symmetry_group() {
  static const std::vector<GroupElement> group = generate_group();
  return group;
}

ParamPoint canonical_representative(const ParamPoint& p) {
  ParamPoint best = p;
  for (const auto& element : symmetry_group()) {
    const ParamPoint image = element.apply(p);
    if (lex_less_with_ties(image, best)) best = image;
  }
  return best;
}

UpbParams canonical_parameters(const UpbParams& p) {
  return to_upb_params(canonical_representative(to_param_point(p)));
}

}  // namespace pptupb
