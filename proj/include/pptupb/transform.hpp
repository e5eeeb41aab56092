#pragma once

#include <cstdint>
#include <random>

#include "pptupb/types.hpp"
#include "pptupb/upb.hpp"

namespace pptupb {

// Pair of determinant-1 operators acting as va (x) vb.
struct ProductTransform {
  Mat3 va, vb;

  // Rescales both factors to determinant 1. Throws std::invalid_argument when
  // a determinant has magnitude below 1e-12.
  static ProductTransform from_matrices(const Mat3& va, const Mat3& vb);

  Mat9 full() const;
};

// rho' = (va (x) vb) rho (va (x) vb)^dag, symmetrized and trace-normalized.
DensityMatrix apply_to_state(const ProductTransform& t, const DensityMatrix& rho);

// Maps each member by (va^dag)^-1 (x) (vb^dag)^-1, renormalized and
// phase-fixed. The result no longer carries a standard-form origin.
Upb apply_to_kernel_vectors(const ProductTransform& t, const Upb& upb);

// Complex-Gaussian entries rescaled to det = 1, with singular-value ratio
// kept <= cond_max by rejection (deterministic clamp fallback for cond_max
// values rejection cannot reach). Identical seed, identical matrix.
Mat3 random_sl3(std::uint64_t seed, double cond_max = 20.0);
Mat3 random_sl3(std::mt19937_64& rng, double cond_max = 20.0);

ProductTransform random_product_transform(std::uint64_t seed, double cond_max = 20.0);

}  // namespace pptupb
