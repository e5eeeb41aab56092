#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "pptupb/types.hpp"
#include "pptupb/upb.hpp"

namespace pptupb {

struct SearchConfig {
  int restarts = 200;
  int max_iters = 500;
  double conv_tol = 1e-13;     // stop when the objective decrease falls below this
  double success_tol = 1e-10;  // objective accepted as "vector lies in the kernel"
  double dedup_tol = 1e-8;     // projective distance below which two results merge
  std::uint64_t seed = 0;
};

struct SeesawResult {
  ProductVector vector;
  double objective;
  int iterations;
};

// Minimize psi^dag q psi over normalized product vectors psi = phi (x) chi by
// alternating exact eigenvector steps: with chi fixed, phi is the minimal
// eigenvector of the 3x3 reduction A(chi)_{ii'} = sum_{jj'} conj(chi_j)
// q((i,j),(i',j')) chi_{j'}, and symmetrically for chi. The objective is
// monotonically non-increasing; q must be Hermitian PSD.
SeesawResult seesaw_minimize(const Mat9& q, const SearchConfig& config,
                             const ProductVector& start);

struct ProductVectorSet {
  std::vector<ProductVector> vectors;
  std::vector<double> objectives;

  std::size_t size() const { return vectors.size(); }
};

// All product vectors in Ker rho up to phase: restarted see-saw on q = rho,
// keeping results below success_tol, deduplicated by projective distance on
// phi and chi separately. Merging is order-deterministic (candidates sorted by
// phase-fixed lexicographic order first). An empty set means no product vector
// reached the threshold (the state is not of the studied class).
ProductVectorSet find_product_vectors_in_kernel(const DensityMatrix& rho,
                                                const SearchConfig& config);

// The one product vector in span{psi_k} of a 5-member UPB that is projectively
// distinct from all five members, found by minimizing psi^dag (1 - P) psi.
// Throws DegeneracyError when none is found (degenerate configuration) or when
// more than one is found (non-generic subspace).
ProductVector find_sixth_vector(const Upb& upb, const SearchConfig& config);

}  // namespace pptupb
