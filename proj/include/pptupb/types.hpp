#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace pptupb {

using cxd = std::complex<double>;

using Vec3 = Eigen::Vector3cd;
using Vec9 = Eigen::Matrix<cxd, 9, 1>;
using Mat3 = Eigen::Matrix3cd;
using Mat9 = Eigen::Matrix<cxd, 9, 9>;
using MatX = Eigen::MatrixXcd;

// Bipartite 3x3 system. Composite index (i,j) -> 3*i + j, with i the A index.
// This convention is global: kron and partial_transpose must agree on it.
inline constexpr int kDimA = 3;
inline constexpr int kDimB = 3;
inline constexpr int kDim = kDimA * kDimB;

constexpr int composite_index(int i, int j) { return kDimB * i + j; }

// 9x9 Hermitian PSD unit-trace matrix on the 3x3 system.
struct DensityMatrix {
  Mat9 mat;
};

// The input state fails a structural test of the studied rank-(4,4) class:
// wrong rank pair, kernel product-vector count != 6, no ordering with positive
// invariants, or no product-transform reconstruction.
class NotInClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerically degenerate configuration: ambiguous null space, near-coplanar
// column triple in a determinant denominator, or a product-vector search that
// cannot isolate a unique solution.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pptupb
