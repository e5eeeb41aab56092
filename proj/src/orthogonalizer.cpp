#include "pptupb/orthogonalizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pptupb/symmetry.hpp"
#include "pptupb/tensor.hpp"
#include "pptupb/verify.hpp"

namespace pptupb {

MatX build_m_matrix(const std::array<Vec3, 5>& targets,
                    const std::array<Vec3, 5>& sources) {
  MatX m = MatX::Zero(15, 9);
  constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 5; ++k) {
    const Vec3 t = targets[k].normalized();
    const Vec3 s = sources[k].normalized();
    for (int r = 0; r < 3; ++r) {
      const int p = pairs[r][0], q = pairs[r][1];
      const int row = 3 * k + r;
      // t_p (C s)_q - t_q (C s)_p = 0, C flattened row-major.
      for (int j = 0; j < 3; ++j) {
        m(row, 3 * q + j) += t(p) * s(j);
        m(row, 3 * p + j) -= t(q) * s(j);
      }
    }
  }
  return m;
}

NullResult solve_null(const MatX& m) {
  if (m.cols() != 9) throw std::invalid_argument("solve_null: expected 9 columns");
  const MatX h = m.adjoint() * m;
  const HermEig eig = herm_eig(h, 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff()));
  const double lam_max = eig.values(eig.values.size() - 1);
  const double lam0 = std::max(eig.values(0), 0.0);
  const double floor = std::max({lam0, 1e-30 * lam_max, 1e-300});
  const double gap = eig.values(1) / floor;
  if (!(gap >= 1e4))
    throw DegeneracyError("solve_null: ambiguous null space (gap " +
                          std::to_string(gap) + ", need >= 1e4)");
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = eig.vectors.col(0)(3 * i + j);
  return {c, gap};
}

Orthogonalization orthogonalize(const std::array<ProductVector, 5>& kernel_vectors,
                                const Upb& standard) {
  if (standard.vectors.size() != 5)
    throw std::invalid_argument("orthogonalize: standard UPB must have 5 members");
  std::array<Vec3, 5> phi_targets, chi_targets, u_sources, v_sources;
  for (int k = 0; k < 5; ++k) {
    phi_targets[k] = kernel_vectors[k].phi;
    chi_targets[k] = kernel_vectors[k].chi;
    u_sources[k] = standard.vectors[k].phi;
    v_sources[k] = standard.vectors[k].chi;
  }
  const NullResult c = solve_null(build_m_matrix(phi_targets, u_sources));
  const NullResult d = solve_null(build_m_matrix(chi_targets, v_sources));

  double residual = 0.0;
  for (int k = 0; k < 5; ++k) {
    residual = std::max(residual,
                        sine_of_angle(Vec3(c.matrix * u_sources[k]), phi_targets[k]));
    residual = std::max(residual,
                        sine_of_angle(Vec3(d.matrix * v_sources[k]), chi_targets[k]));
  }
  return {c.matrix, d.matrix, residual, std::min(c.null_gap, d.null_gap),
          c.null_gap, d.null_gap};
}

namespace {

void require_valid_state(const DensityMatrix& rho) {
  const double herm_dev = (rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-10)
    throw std::invalid_argument("classify: input is not Hermitian");
  if (std::abs(rho.mat.trace().real() - 1.0) > 1e-8)
    throw std::invalid_argument("classify: input trace is not 1");
  const HermEig eig = herm_eig(rho.mat, 1e-10);
  if (eig.values(0) < -1e-8)
    throw std::invalid_argument("classify: input is not positive semidefinite");
}

}  // namespace

ClassificationReport classify(const DensityMatrix& rho, const SearchConfig& config,
                              double recon_tol) {
  require_valid_state(rho);

  const RankReport ranks = rank_pair(rho);
  if (ranks.rank != 4 || ranks.rank_pt != 4)
    throw NotInClassError("classify: rank pair (" + std::to_string(ranks.rank) + "," +
                          std::to_string(ranks.rank_pt) + "), expected (4,4)");

  ProductVectorSet kernel = find_product_vectors_in_kernel(rho, config);
  if (kernel.size() != 6)
    throw NotInClassError("classify: found " + std::to_string(kernel.size()) +
                          " kernel product vectors, expected 6");

  const OrderingReport orderings = find_positive_orderings(kernel.vectors);
  if (orderings.admissible.empty())
    throw NotInClassError(
        "classify: no ordering yields positive invariants; the kernel UPB is "
        "not SL-equivalent to an orthogonal UPB");

  const std::array<int, 6>& ordering = orderings.admissible.front();
  const InvariantTuple invariants =
      compute_invariants_ordered(kernel.vectors, ordering);
  const UpbParams params = recover_parameters(invariants);

  const Upb standard = build_upb(params);
  const ProductVector standard_sixth = find_sixth_vector(standard, config);

  std::array<ProductVector, 5> ordered_kernel;
  for (int k = 0; k < 5; ++k) ordered_kernel[k] = kernel.vectors[ordering[k]];
  const Orthogonalization orth = orthogonalize(ordered_kernel, standard);

  ProductTransform transform;
  try {
    transform = ProductTransform::from_matrices(orth.c_matrix.adjoint().inverse(),
                                                orth.d_matrix.adjoint().inverse());
  } catch (const std::invalid_argument& e) {
    throw DegeneracyError(std::string("classify: singular orthogonalizer: ") +
                          e.what());
  }

  const DensityMatrix standard_state = build_state(standard);
  const DensityMatrix reconstructed = apply_to_state(transform, standard_state);
  const double recon_residual = (rho.mat - reconstructed.mat).norm();
  if (!(recon_residual < recon_tol))
    throw NotInClassError("classify: reconstruction residual " +
                          std::to_string(recon_residual) + " exceeds tolerance");

  // The sixth pair is not used in the fit; its alignment is a prediction check.
  const ProductVector& kernel_sixth = kernel.vectors[ordering[5]];
  const double sixth_sine_a =
      sine_of_angle(Vec3(orth.c_matrix * standard_sixth.phi), kernel_sixth.phi);
  const double sixth_sine_b =
      sine_of_angle(Vec3(orth.d_matrix * standard_sixth.chi), kernel_sixth.chi);

  double kernel_objective_max = 0.0;
  for (double obj : kernel.objectives)
    kernel_objective_max = std::max(kernel_objective_max, obj);

  ClassificationReport report;
  report.params = params;
  report.canonical_params = canonical_parameters(params);
  report.invariants = invariants;
  report.orderings = orderings;
  report.transform = transform;
  report.kernel_vectors = std::move(kernel);
  report.residuals = {
      {"reconstruction", recon_residual},
      {"fit_sine_max", orth.residual},
      {"null_gap_c", orth.gap_c},
      {"null_gap_d", orth.gap_d},
      {"sixth_sine_a", sixth_sine_a},
      {"sixth_sine_b", sixth_sine_b},
      {"kernel_objective_max", kernel_objective_max},
  };
  return report;
}

}  // namespace pptupb
