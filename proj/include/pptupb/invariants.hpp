#pragma once

#include <array>
#include <vector>

#include "pptupb/types.hpp"
#include "pptupb/upb.hpp"

namespace pptupb {

// The four determinant-ratio invariants of five product vectors. They are
// unchanged under per-column rescaling and under product transformations of
// the factors. On standard-form input they evaluate to
// (a^2, b^2/a^2, c^2, d^2/c^2).
struct InvariantTuple {
  cxd s1, s2, s3, s4;
  std::array<int, 6> ordering{0, 1, 2, 3, 4, 5};  // vector labels; first 5 used

  std::array<cxd, 4> as_array() const { return {s1, s2, s3, s4}; }
};

// Reality/positivity test: |Im s| < 1e-8 (1 + |s|) and Re s > 1e-8.
bool is_real_positive(const cxd& s);

// Invariants of exactly 5 product vectors (columns renormalized internally).
// Throws DegeneracyError when a denominator determinant has magnitude <= 1e-12
// (three A or B factors nearly coplanar).
InvariantTuple compute_invariants(const std::vector<ProductVector>& vectors);

// Invariants of vectors[ordering[0..4]] from a set of 6.
InvariantTuple compute_invariants_ordered(const std::vector<ProductVector>& vectors,
                                          const std::array<int, 6>& ordering);

struct OrderingReport {
  std::vector<std::array<int, 6>> admissible;  // lexicographic enumeration order
  int total_tested = 0;

  // Number of admissible orderings that leave `sixth_label` in last position.
  int count_for_excluded(int sixth_label) const;
};

// Enumerates all 720 orderings of 6 product vectors and keeps those whose four
// invariants are real and positive. An empty list is a valid outcome: the set
// is not SL-equivalent to an orthogonal UPB.
OrderingReport find_positive_orderings(const std::vector<ProductVector>& vectors);

// a = sqrt(s1), b = sqrt(s1 s2), c = sqrt(s3), d = sqrt(s3 s4).
// Throws std::invalid_argument unless all four invariants are real positive.
UpbParams recover_parameters(const InvariantTuple& s);

}  // namespace pptupb
