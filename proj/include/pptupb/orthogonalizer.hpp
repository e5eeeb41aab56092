#pragma once

#include <array>
#include <map>
#include <string>

#include "pptupb/invariants.hpp"
#include "pptupb/product_search.hpp"
#include "pptupb/transform.hpp"
#include "pptupb/types.hpp"
#include "pptupb/upb.hpp"

namespace pptupb {

// 15x9 coefficient matrix of the homogeneous constraints
// targets[k] wedge (C sources[k]) = 0, k = 0..4, for the 9 unknowns C_ij
// flattened row-major. Each k contributes the 3 independent components of the
// antisymmetric product; vec(C) is a null vector iff C maps every source
// parallel to its target. Columns are normalized before assembly.
MatX build_m_matrix(const std::array<Vec3, 5>& targets,
                    const std::array<Vec3, 5>& sources);

struct NullResult {
  Mat3 matrix;      // eigenvector of M^dag M with smallest eigenvalue, row-major
  double null_gap;  // second-smallest / smallest eigenvalue of M^dag M
};

// Throws DegeneracyError when null_gap < 1e4 (no unique product transform).
NullResult solve_null(const MatX& m);

struct Orthogonalization {
  Mat3 c_matrix, d_matrix;  // C u_k || phi_k and D v_k || chi_k
  double residual;          // max sine of angle over the five fitted pairs
  double null_gap;          // min(gap_c, gap_d)
  double gap_c = 0.0, gap_d = 0.0;
};

// Solves C and D with the kernel factors as targets and the standard-form
// members as sources.
Orthogonalization orthogonalize(const std::array<ProductVector, 5>& kernel_vectors,
                                const Upb& standard);

struct ClassificationReport {
  UpbParams params;            // recovered from the first admissible ordering
  UpbParams canonical_params;  // orbit representative
  InvariantTuple invariants;
  OrderingReport orderings;
  ProductTransform transform;  // V_A, V_B with det 1
  ProductVectorSet kernel_vectors;
  std::map<std::string, double> residuals;
};

// Full pipeline: (1) rank pair must be (4,4); (2) exactly 6 kernel product
// vectors; (3) at least one ordering with positive invariants; (4) parameter
// recovery; (5) standard UPB; (6) C, D null-space solves; (7) V_A = (C^dag)^-1,
// V_B = (D^dag)^-1 rescaled to det 1; (8) reconstruction residual below
// recon_tol; (9) canonical orbit representative. Throws NotInClassError or
// DegeneracyError on the failure paths.
ClassificationReport classify(const DensityMatrix& rho, const SearchConfig& config,
                              double recon_tol = 1e-7);

}  // namespace pptupb
