#pragma once

#include <optional>
#include <vector>

#include "pptupb/tensor.hpp"
#include "pptupb/types.hpp"

namespace pptupb {

// The four positive parameters of the standard-form orthogonal UPB. The
// squared parameters (alpha, beta, gamma, delta) are the coordinates the
// symmetry group acts on.
struct UpbParams {
  double a, b, c, d;

  double alpha() const { return a * a; }
  double beta() const { return b * b; }
  double gamma() const { return c * c; }
  double delta() const { return d * d; }
};

// Throws std::invalid_argument unless all four parameters are finite and > 0.
void validate(const UpbParams& p);

// Normalized product vector phi (x) chi with the Kronecker vector cached.
// Factors are unit norm and phase-fixed on construction.
struct ProductVector {
  Vec3 phi, chi;
  Vec9 psi;

  ProductVector() = default;
  ProductVector(const Vec3& phi_in, const Vec3& chi_in);
};

// Five product vectors; `origin` is set when built from the standard form,
// in which case the cyclic orthogonality relations hold.
struct Upb {
  std::vector<ProductVector> vectors;
  std::optional<UpbParams> origin;
};

// 3x5 standard-form coefficient matrices, columns exactly as printed
// (unnormalized). Column k of build_u is the A factor of member k.
MatX build_u(double a, double b);
MatX build_v(double c, double d);

Upb build_upb(const UpbParams& params);

// Residuals of the pentagram orthogonality pattern on normalized factors:
// A edges (k, k+1 mod 5), B edges (k, k+2 mod 5).
struct OrthogonalityReport {
  double max_a_residual = 0.0;
  double max_b_residual = 0.0;

  double max_residual() const {
    return max_a_residual > max_b_residual ? max_a_residual : max_b_residual;
  }
};
OrthogonalityReport check_orthogonality_graph(const Upb& upb);

// rho = (1 - P) / (9 - 5) with P the orthogonal projector onto span{psi_k}.
// Rejects vector sets spanning fewer than 5 dimensions.
DensityMatrix build_state(const Upb& upb);

}  // namespace pptupb
