#include "pptupb/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pptupb {

namespace {

constexpr double kDenominatorTol = 1e-12;
constexpr double kRealityTol = 1e-8;

cxd det3(const Vec3& x, const Vec3& y, const Vec3& z) {
  Mat3 m;
  m.col(0) = x;
  m.col(1) = y;
  m.col(2) = z;
  return m.determinant();
}

cxd checked_denominator(const cxd& det) {
  if (std::abs(det) <= kDenominatorTol)
    throw DegeneracyError(
        "compute_invariants: three factors nearly coplanar (denominator "
        "determinant below tolerance)");
  return det;
}

InvariantTuple from_columns(const std::array<Vec3, 5>& u, const std::array<Vec3, 5>& v) {
  auto du = [&u](int i, int j, int k) { return det3(u[i], u[j], u[k]); };
  auto dv = [&v](int i, int j, int k) { return det3(v[i], v[j], v[k]); };

  InvariantTuple s;
  s.s1 = -du(0, 1, 3) * du(0, 2, 4) /
         (checked_denominator(du(0, 1, 4)) * checked_denominator(du(0, 2, 3)));
  s.s2 = -du(0, 1, 2) * du(1, 3, 4) /
         (checked_denominator(du(0, 1, 3)) * checked_denominator(du(1, 2, 4)));
  s.s3 = dv(0, 1, 2) * dv(0, 3, 4) /
         (checked_denominator(dv(0, 1, 4)) * checked_denominator(dv(0, 2, 3)));
  s.s4 = dv(0, 2, 4) * dv(1, 2, 3) /
         (checked_denominator(dv(0, 1, 2)) * checked_denominator(dv(2, 3, 4)));
  return s;
}

}  // namespace

bool is_real_positive(const cxd& s) {
  return std::abs(s.imag()) < kRealityTol * (1.0 + std::abs(s)) &&
         s.real() > kRealityTol;
}

InvariantTuple compute_invariants(const std::vector<ProductVector>& vectors) {
  if (vectors.size() != 5)
    throw std::invalid_argument("compute_invariants: expected 5 product vectors");
  std::array<Vec3, 5> u, v;
  for (int k = 0; k < 5; ++k) {
    u[k] = vectors[k].phi.normalized();
    v[k] = vectors[k].chi.normalized();
  }
  return from_columns(u, v);
}

InvariantTuple compute_invariants_ordered(const std::vector<ProductVector>& vectors,
                                          const std::array<int, 6>& ordering) {
  if (vectors.size() != 6)
    throw std::invalid_argument("compute_invariants_ordered: expected 6 vectors");
  std::array<Vec3, 5> u, v;
  for (int k = 0; k < 5; ++k) {
    u[k] = vectors[ordering[k]].phi.normalized();
    v[k] = vectors[ordering[k]].chi.normalized();
  }
  InvariantTuple s = from_columns(u, v);
  s.ordering = ordering;
  return s;
}

int OrderingReport::count_for_excluded(int sixth_label) const {
  return static_cast<int>(
      std::count_if(admissible.begin(), admissible.end(),
                    [sixth_label](const std::array<int, 6>& ord) {
                      return ord[5] == sixth_label;
                    }));
}

OrderingReport find_positive_orderings(const std::vector<ProductVector>& vectors) {
  if (vectors.size() != 6)
    throw std::invalid_argument("find_positive_orderings: expected 6 product vectors");
  OrderingReport report;
  std::array<int, 6> ordering{0, 1, 2, 3, 4, 5};
  do {
    ++report.total_tested;
    try {
      const InvariantTuple s = compute_invariants_ordered(vectors, ordering);
      const auto values = s.as_array();
      if (std::all_of(values.begin(), values.end(),
                      [](const cxd& z) { return is_real_positive(z); }))
        report.admissible.push_back(ordering);
    } catch (const DegeneracyError&) {
      // Near-coplanar triple for this ordering: not admissible.
    }
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return report;
}

UpbParams recover_parameters(const InvariantTuple& s) {
  for (const cxd& value : s.as_array()) {
    if (!is_real_positive(value))
      throw std::invalid_argument(
          "recover_parameters: invariants must be real and positive");
  }
  UpbParams p;
  p.a = std::sqrt(s.s1.real());
  p.b = std::sqrt(s.s1.real() * s.s2.real());
  p.c = std::sqrt(s.s3.real());
  p.d = std::sqrt(s.s3.real() * s.s4.real());
  return p;
}

}  // namespace pptupb
