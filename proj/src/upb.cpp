#include "pptupb/upb.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pptupb {

void validate(const UpbParams& p) {
  for (double x : {p.a, p.b, p.c, p.d}) {
    if (!std::isfinite(x) || !(x > 0.0))
      throw std::invalid_argument("UPB parameters must be finite and strictly positive");
  }
}

ProductVector::ProductVector(const Vec3& phi_in, const Vec3& chi_in)
    : phi(phase_fixed(phi_in)), chi(phase_fixed(chi_in)), psi(kron(phi, chi)) {}

MatX build_u(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("build_u: parameters must be strictly positive");
  MatX u(3, 5);
  u << 1, 0, a, b, 0,
       0, 1, 0, 1, a,
       0, 0, b, -a, 1;
  return u;
}

MatX build_v(double c, double d) {
  if (!(c > 0.0) || !(d > 0.0) || !std::isfinite(c) || !std::isfinite(d))
    throw std::invalid_argument("build_v: parameters must be strictly positive");
  MatX v(3, 5);
  v << 1, d, 0, 0, c,
       0, 1, 1, c, 0,
       0, -c, 0, 1, d;
  return v;
}

Upb build_upb(const UpbParams& params) {
  validate(params);
  const MatX u = build_u(params.a, params.b);
  const MatX v = build_v(params.c, params.d);
  Upb upb;
  upb.vectors.reserve(5);
  for (int k = 0; k < 5; ++k)
    upb.vectors.emplace_back(Vec3(u.col(k)), Vec3(v.col(k)));
  upb.origin = params;
  return upb;
}

OrthogonalityReport check_orthogonality_graph(const Upb& upb) {
  if (upb.vectors.size() != 5)
    throw std::invalid_argument("check_orthogonality_graph: expected 5 vectors");
  OrthogonalityReport report;
  for (int k = 0; k < 5; ++k) {
    const auto& a1 = upb.vectors[k].phi;
    const auto& a2 = upb.vectors[(k + 1) % 5].phi;
    report.max_a_residual = std::max(report.max_a_residual, std::abs(a1.dot(a2)));
    const auto& b1 = upb.vectors[k].chi;
    const auto& b2 = upb.vectors[(k + 2) % 5].chi;
    report.max_b_residual = std::max(report.max_b_residual, std::abs(b1.dot(b2)));
  }
  return report;
}

DensityMatrix build_state(const Upb& upb) {
  if (upb.vectors.size() != 5)
    throw std::invalid_argument("build_state: expected 5 vectors");
  std::vector<Vec9> columns;
  columns.reserve(5);
  for (const auto& pv : upb.vectors) columns.push_back(pv.psi);
  const Mat9 proj = projector_onto_span(columns, 5);
  Mat9 rho = (Mat9::Identity() - proj) / static_cast<double>(kDim - 5);
  rho = (rho + rho.adjoint()) / 2.0;
  return {rho};
}

}  // namespace pptupb
