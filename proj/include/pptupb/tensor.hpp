#pragma once

#include <vector>

#include "pptupb/types.hpp"

namespace pptupb {

// psi[(i,j)] = phi[i] * chi[j].
Vec9 kron(const Vec3& phi, const Vec3& chi);

// Product operator va (x) vb on composite indices.
Mat9 kron(const Mat3& va, const Mat3& vb);

// Transposition on subsystem B: out((i,j),(i',j')) = in((i,j'),(i',j)).
// Involutive, trace- and Hermiticity-preserving.
Mat9 partial_transpose(const Mat9& rho);

// Reduced operators. trace_out_b(rho) lives on A: (i,i') = sum_j rho((i,j),(i',j)).
Mat3 trace_out_b(const Mat9& rho);
Mat3 trace_out_a(const Mat9& rho);

struct HermEig {
  Eigen::VectorXd values;  // ascending
  MatX vectors;            // orthonormal columns, col(k) <-> values(k)
};

// Eigendecomposition of a Hermitian matrix. Rejects inputs whose entrywise
// deviation from the conjugate transpose exceeds herm_tol.
HermEig herm_eig(const MatX& m, double herm_tol = 1e-12);

// Count of eigenvalues with |lambda| > rel_tol * max|lambda|; 0 for the zero
// matrix. Hermitian input.
int numerical_rank(const MatX& m, double rel_tol = 1e-8);

// Orthogonal projector onto the span of eigenvectors with |lambda| above the
// relative threshold.
MatX image_projector(const MatX& herm, double rel_tol = 1e-8);

// Unit norm, first component of magnitude > 1e-10 made real positive.
Vec3 phase_fixed(const Vec3& v);
Vec9 phase_fixed(const Vec9& v);

// 1 - |<x,y>|^2 / (|x|^2 |y|^2), clamped to [0,1].
double projective_distance(const Vec3& x, const Vec3& y);
double projective_distance(const Vec9& x, const Vec9& y);

// Sine of the principal angle between the lines spanned by x and y.
double sine_of_angle(const Vec3& x, const Vec3& y);
double sine_of_angle(const Vec9& x, const Vec9& y);

// Orthogonal projector onto span{columns}. When expected_dim >= 0, rejects
// inputs whose numerical span dimension differs from it.
Mat9 projector_onto_span(const std::vector<Vec9>& columns, int expected_dim = -1);

}  // namespace pptupb
