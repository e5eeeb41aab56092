#include "pptupb/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "pptupb/rng.hpp"
#include "pptupb/tensor.hpp"

namespace pptupb {

PptResult is_ppt(const DensityMatrix& rho) {
  const HermEig eig = herm_eig(partial_transpose(rho.mat), 1e-10);
  const double min_eig = eig.values(0);
  return {min_eig > -1e-10, min_eig};
}

RankReport rank_pair(const DensityMatrix& rho, double rel_tol) {
  RankReport report;
  report.rank = numerical_rank(rho.mat, rel_tol);
  report.rank_pt = numerical_rank(partial_transpose(rho.mat), rel_tol);
  report.local_rank_a = numerical_rank(trace_out_b(rho.mat), rel_tol);
  report.local_rank_b = numerical_rank(trace_out_a(rho.mat), rel_tol);
  return report;
}

EntanglementResult is_entangled_by_image(const DensityMatrix& rho,
                                         const SearchConfig& config) {
  Mat9 q = Mat9::Identity() - image_projector(rho.mat);
  q = (q + q.adjoint()) / 2.0;

  std::mt19937_64 rng(config.seed);
  double min_objective = 1.0;
  ProductVector best;
  bool have_best = false;
  for (int r = 0; r < config.restarts; ++r) {
    const ProductVector start(random_unit_vec3(rng), random_unit_vec3(rng));
    const SeesawResult result = seesaw_minimize(q, config, start);
    if (result.objective < min_objective) {
      min_objective = result.objective;
      best = result.vector;
      have_best = true;
    }
  }
  if (have_best) {
    SearchConfig polish = config;
    polish.conv_tol = 0.0;
    polish.max_iters = 150;
    const SeesawResult settled = seesaw_minimize(q, polish, best);
    min_objective = std::min(min_objective, settled.objective);
  }

  EntanglementStatus status;
  if (min_objective > 1e-6)
    status = EntanglementStatus::kEntangled;
  else if (min_objective < 1e-10)
    status = EntanglementStatus::kProductVectorInImage;
  else
    status = EntanglementStatus::kIndeterminate;
  return {status, min_objective};
}

namespace {

// Orthonormal real basis of the Hermitian 9x9 matrices: diagonal units, then
// symmetric and antisymmetric pair combinations.
Mat9 hermitian_basis_element(int index) {
  Mat9 h = Mat9::Zero();
  if (index < kDim) {
    h(index, index) = 1.0;
    return h;
  }
  index -= kDim;
  const int pair = index / 2;
  const bool antisymmetric = index % 2;
  int count = 0;
  for (int k = 0; k < kDim; ++k) {
    for (int l = k + 1; l < kDim; ++l) {
      if (count == pair) {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        if (antisymmetric) {
          h(k, l) = cxd(0.0, inv_sqrt2);
          h(l, k) = cxd(0.0, -inv_sqrt2);
        } else {
          h(k, l) = inv_sqrt2;
          h(l, k) = inv_sqrt2;
        }
        return h;
      }
      ++count;
    }
  }
  throw std::logic_error("hermitian_basis_element: index out of range");
}

}  // namespace

ExtremalResult is_extremal(const DensityMatrix& rho) {
  if (!is_ppt(rho).ppt)
    throw std::invalid_argument("is_extremal: input must be a PPT state");

  const MatX proj_im = image_projector(rho.mat);
  const MatX proj_im_pt = image_projector(partial_transpose(rho.mat));
  const Mat9 comp_im = Mat9::Identity() - proj_im;
  const Mat9 comp_im_pt = Mat9::Identity() - proj_im_pt;

  // Real-linear constraint map H -> ((1-P) H, (1-Q) H^P) over the 81-dim
  // space of Hermitian matrices; extremality = 1-dimensional null space.
  constexpr int hermitian_dim = kDim * kDim;
  Eigen::MatrixXd constraint(4 * hermitian_dim, hermitian_dim);
  for (int m = 0; m < hermitian_dim; ++m) {
    const Mat9 h = hermitian_basis_element(m);
    const Mat9 x1 = comp_im * h;
    const Mat9 x2 = comp_im_pt * partial_transpose(h);
    int row = 0;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        constraint(row++, m) = x1(i, j).real();
        constraint(row++, m) = x1(i, j).imag();
      }
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        constraint(row++, m) = x2(i, j).real();
        constraint(row++, m) = x2(i, j).imag();
      }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(constraint);
  const auto& sv = svd.singularValues();  // descending
  const double sv_max = sv(0);
  int nullity;
  if (sv_max < 1e-12) {
    nullity = hermitian_dim;
  } else {
    nullity = 0;
    for (int k = 0; k < sv.size(); ++k)
      if (sv(k) <= 1e-8 * sv_max) ++nullity;
  }
  const double witness = sv(sv.size() - 2);
  return {nullity == 1, nullity, witness};
}

StateCertificate certify(const DensityMatrix& rho, const SearchConfig& config) {
  StateCertificate cert;
  cert.ppt = is_ppt(rho);
  cert.ranks = rank_pair(rho);
  cert.entanglement = is_entangled_by_image(rho, config);
  if (cert.ppt.ppt) {
    cert.extremal_checked = true;
    cert.extremal = is_extremal(rho);
  } else {
    cert.extremal_checked = false;
    cert.extremal = {false, 0, 0.0};
  }
  return cert;
}

}  // namespace pptupb
