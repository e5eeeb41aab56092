#include "pptupb/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pptupb {

Vec9 kron(const Vec3& phi, const Vec3& chi) {
  Vec9 out;
  for (int i = 0; i < kDimA; ++i)
    for (int j = 0; j < kDimB; ++j) out(composite_index(i, j)) = phi(i) * chi(j);
  return out;
}

Mat9 kron(const Mat3& va, const Mat3& vb) {
  Mat9 out;
  for (int i = 0; i < kDimA; ++i)
    for (int ip = 0; ip < kDimA; ++ip)
      out.block<3, 3>(3 * i, 3 * ip) = va(i, ip) * vb;
  return out;
}

Mat9 partial_transpose(const Mat9& rho) {
  Mat9 out;
  for (int i = 0; i < kDimA; ++i)
    for (int ip = 0; ip < kDimA; ++ip)
      out.block<3, 3>(3 * i, 3 * ip) = rho.block<3, 3>(3 * i, 3 * ip).transpose();
  return out;
}

Mat3 trace_out_b(const Mat9& rho) {
  Mat3 out = Mat3::Zero();
  for (int i = 0; i < kDimA; ++i)
    for (int ip = 0; ip < kDimA; ++ip)
      out(i, ip) = rho.block<3, 3>(3 * i, 3 * ip).trace();
  return out;
}

Mat3 trace_out_a(const Mat9& rho) {
  Mat3 out = Mat3::Zero();
  for (int i = 0; i < kDimA; ++i) out += rho.block<3, 3>(3 * i, 3 * i);
  return out;
}

HermEig herm_eig(const MatX& m, double herm_tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("herm_eig: matrix not square");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(dev <= herm_tol))
    throw std::invalid_argument("herm_eig: input deviates from Hermitian by " +
                                std::to_string(dev));
  Eigen::SelfAdjointEigenSolver<MatX> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("herm_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

int numerical_rank(const MatX& m, double rel_tol) {
  const HermEig eig = herm_eig(m, 1e-10);
  const double max_abs = eig.values.cwiseAbs().maxCoeff();
  if (max_abs == 0.0) return 0;
  int rank = 0;
  for (int k = 0; k < eig.values.size(); ++k)
    if (std::abs(eig.values(k)) > rel_tol * max_abs) ++rank;
  return rank;
}

MatX image_projector(const MatX& herm, double rel_tol) {
  const HermEig eig = herm_eig(herm, 1e-10);
  const double max_abs = eig.values.cwiseAbs().maxCoeff();
  MatX proj = MatX::Zero(herm.rows(), herm.cols());
  if (max_abs == 0.0) return proj;
  for (int k = 0; k < eig.values.size(); ++k)
    if (std::abs(eig.values(k)) > rel_tol * max_abs)
      proj += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  return (proj + proj.adjoint()) / 2.0;
}

namespace {

template <typename VecT>
VecT phase_fixed_impl(const VecT& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("phase_fixed: zero or non-finite vector");
  VecT w = v / n;
  for (int k = 0; k < w.size(); ++k) {
    const double mag = std::abs(w(k));
    if (mag > 1e-10) {
      w *= std::conj(w(k)) / mag;
      break;
    }
  }
  return w;
}

template <typename VecT>
double projective_distance_impl(const VecT& x, const VecT& y) {
  const double nx = x.squaredNorm(), ny = y.squaredNorm();
  if (nx == 0.0 || ny == 0.0)
    throw std::invalid_argument("projective_distance: zero vector");
  const double overlap = std::norm(x.dot(y)) / (nx * ny);
  return std::clamp(1.0 - overlap, 0.0, 1.0);
}

}  // namespace

Vec3 phase_fixed(const Vec3& v) { return phase_fixed_impl(v); }
Vec9 phase_fixed(const Vec9& v) { return phase_fixed_impl(v); }

double projective_distance(const Vec3& x, const Vec3& y) {
  return projective_distance_impl(x, y);
}
double projective_distance(const Vec9& x, const Vec9& y) {
  return projective_distance_impl(x, y);
}

double sine_of_angle(const Vec3& x, const Vec3& y) {
  return std::sqrt(projective_distance(x, y));
}
double sine_of_angle(const Vec9& x, const Vec9& y) {
  return std::sqrt(projective_distance(x, y));
}

Mat9 projector_onto_span(const std::vector<Vec9>& columns, int expected_dim) {
  if (columns.empty()) throw std::invalid_argument("projector_onto_span: no columns");
  MatX m(kDim, static_cast<int>(columns.size()));
  for (int k = 0; k < static_cast<int>(columns.size()); ++k) m.col(k) = columns[k];
  Eigen::JacobiSVD<MatX> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > 1e-8 * smax) ++rank;
  if (expected_dim >= 0 && rank != expected_dim)
    throw std::invalid_argument("projector_onto_span: span dimension " +
                                std::to_string(rank) + ", expected " +
                                std::to_string(expected_dim));
  const MatX basis = svd.matrixU().leftCols(rank);
  Mat9 proj = basis * basis.adjoint();
  return (proj + proj.adjoint()) / 2.0;
}

}  // namespace pptupb
