#include "pptupb/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "pptupb/rng.hpp"
#include "pptupb/tensor.hpp"

namespace pptupb {

namespace {

Mat3 rescale_to_unit_det(const Mat3& m) {
  const cxd det = m.determinant();
  if (std::abs(det) < 1e-12)
    throw std::invalid_argument("product transform factor is singular");
  return m * std::pow(det, cxd(-1.0 / 3.0, 0.0));
}

}  // namespace

ProductTransform ProductTransform::from_matrices(const Mat3& va, const Mat3& vb) {
  return {rescale_to_unit_det(va), rescale_to_unit_det(vb)};
}

Mat9 ProductTransform::full() const { return kron(va, vb); }

DensityMatrix apply_to_state(const ProductTransform& t, const DensityMatrix& rho) {
  const Mat9 w = t.full();
  Mat9 out = w * rho.mat * w.adjoint();
  out = (out + out.adjoint()) / 2.0;
  out /= out.trace().real();
  return {out};
}

Upb apply_to_kernel_vectors(const ProductTransform& t, const Upb& upb) {
  const Mat3 wa = t.va.adjoint().inverse();
  const Mat3 wb = t.vb.adjoint().inverse();
  Upb out;
  out.vectors.reserve(upb.vectors.size());
  for (const auto& pv : upb.vectors)
    out.vectors.emplace_back(Vec3(wa * pv.phi), Vec3(wb * pv.chi));
  return out;
}

Mat3 random_sl3(std::mt19937_64& rng, double cond_max) {
  if (!(cond_max >= 1.0))
    throw std::invalid_argument("random_sl3: cond_max must be >= 1");
  // Rejection cannot reach cond_max ~ 1 (measure zero); one draw plus a
  // singular-value clamp covers that case deterministically.
  const int max_attempts = cond_max <= 1.0 + 1e-9 ? 1 : 1000;
  Mat3 m;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = complex_gaussian(rng);
    if (std::abs(m.determinant()) < 1e-6) continue;
    m = rescale_to_unit_det(m);
    Eigen::JacobiSVD<Mat3> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(0) / sv(2) <= cond_max) return m;
  }
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector3d sv = svd.singularValues();
  for (int k = 0; k < 3; ++k) sv(k) = std::max(sv(k), sv(0) / cond_max);
  const Mat3 clamped = svd.matrixU() * sv.asDiagonal() * svd.matrixV().adjoint();
  return rescale_to_unit_det(clamped);
}

Mat3 random_sl3(std::uint64_t seed, double cond_max) {
  std::mt19937_64 rng(seed);
  return random_sl3(rng, cond_max);
}

ProductTransform random_product_transform(std::uint64_t seed, double cond_max) {
  std::mt19937_64 rng(seed);
  const Mat3 va = random_sl3(rng, cond_max);
  const Mat3 vb = random_sl3(rng, cond_max);
  return ProductTransform::from_matrices(va, vb);
}

}  // namespace pptupb
