#include "doctest.h"

#include <random>

#include "pptupb/rng.hpp"
#include "pptupb/tensor.hpp"
#include "pptupb/transform.hpp"
#include "pptupb/upb.hpp"

#include "test_util.hpp"

using namespace pptupb;

TEST_SUITE("tensor") {

TEST_CASE("kron maps basis pairs to composite basis vectors") {
  Vec3 e0(1, 0, 0), e1(0, 1, 0);
  Vec9 k00 = kron(e0, e0);
  CHECK(k00(0) == cxd(1, 0));
  CHECK(k00.tail<8>().norm() == 0.0);

  Vec9 k01 = kron(e0, e1);
  CHECK(k01(composite_index(0, 1)) == cxd(1, 0));
  CHECK(std::abs(k01.norm() - 1.0) < 1e-15);
}

TEST_CASE("kron norm is multiplicative and kron is bilinear") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Vec3 phi, phi2, chi;
    for (int k = 0; k < 3; ++k) {
      phi(k) = complex_gaussian(rng);
      phi2(k) = complex_gaussian(rng);
      chi(k) = complex_gaussian(rng);
    }
    CHECK(std::abs(kron(phi, chi).norm() - phi.norm() * chi.norm()) < 1e-12);

    const cxd a = complex_gaussian(rng), b = complex_gaussian(rng);
    const Vec9 lhs = kron(Vec3(a * phi + b * phi2), chi);
    const Vec9 rhs = a * kron(phi, chi) + b * kron(phi2, chi);
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("partial transpose is an involution and matches the index map") {
  std::mt19937_64 rng(12);
  Mat9 rho;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) rho(i, j) = complex_gaussian(rng);
  rho = (rho + rho.adjoint()).eval();

  const Mat9 pt = partial_transpose(rho);
  CHECK((partial_transpose(pt) - rho).norm() == 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int ip = 0; ip < 3; ++ip)
        for (int jp = 0; jp < 3; ++jp)
          CHECK(pt(composite_index(i, j), composite_index(ip, jp)) ==
                rho(composite_index(i, jp), composite_index(ip, j)));

  CHECK(std::abs((pt.trace() - rho.trace())) == 0.0);
  CHECK((pt - pt.adjoint()).norm() == 0.0);
}

TEST_CASE("partial transpose of a product projector conjugates the B factor") {
  std::mt19937_64 rng(13);
  const Vec3 phi = random_unit_vec3(rng);
  const Vec3 chi = random_unit_vec3(rng);
  const Vec9 psi = kron(phi, chi);
  const Vec9 psi_conj = kron(phi, Vec3(chi.conjugate()));
  const Mat9 lhs = partial_transpose(psi * psi.adjoint());
  const Mat9 rhs = psi_conj * psi_conj.adjoint();
  CHECK((lhs - rhs).norm() < 1e-14);
}

TEST_CASE("state of a real UPB is invariant under partial transposition") {
  // Standard-form members are real, so rho^P = rho.
  const DensityMatrix rho = build_state(build_upb({1.3, 0.7, 2.1, 0.4}));
  CHECK((partial_transpose(rho.mat) - rho.mat).norm() < 1e-13);
}

TEST_CASE("herm_eig on simple spectra") {
  MatX identity = MatX::Identity(9, 9);
  HermEig eig = herm_eig(identity);
  for (int k = 0; k < 9; ++k) CHECK(eig.values(k) == doctest::Approx(1.0));

  MatX diag = MatX::Zero(3, 3);
  diag(0, 0) = 3.0;
  diag(1, 1) = 1.0;
  diag(2, 2) = 2.0;
  eig = herm_eig(diag);
  CHECK(eig.values(0) == doctest::Approx(1.0));
  CHECK(eig.values(1) == doctest::Approx(2.0));
  CHECK(eig.values(2) == doctest::Approx(3.0));

  std::mt19937_64 rng(14);
  const Vec9 psi = kron(random_unit_vec3(rng), random_unit_vec3(rng));
  eig = herm_eig(MatX(psi * psi.adjoint()));
  for (int k = 0; k < 8; ++k) CHECK(std::abs(eig.values(k)) < 1e-12);
  CHECK(eig.values(8) == doctest::Approx(1.0));
}

TEST_CASE("herm_eig reconstruction and unitarity") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    Mat9 m;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) m(i, j) = complex_gaussian(rng);
    m = ((m + m.adjoint()) / 2.0).eval();
    const HermEig eig = herm_eig(MatX(m));
    const MatX rebuilt =
        eig.vectors * eig.values.asDiagonal().toDenseMatrix().cast<cxd>() *
        eig.vectors.adjoint();
    CHECK((MatX(m) - rebuilt).norm() < 1e-10 * m.norm());
    CHECK((eig.vectors.adjoint() * eig.vectors - MatX::Identity(9, 9)).norm() < 1e-10);
  }
}

TEST_CASE("herm_eig eigenvalues are invariant under unitary conjugation") {
  std::mt19937_64 rng(16);
  Mat9 m;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) m(i, j) = complex_gaussian(rng);
  m = ((m + m.adjoint()) / 2.0).eval();
  const HermEig base = herm_eig(MatX(m));
  for (int trial = 0; trial < 5; ++trial) {
    Mat9 g;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) g(i, j) = complex_gaussian(rng);
    const Eigen::HouseholderQR<Mat9> qr(g);
    const Mat9 unitary = qr.householderQ();
    Mat9 conj = unitary * m * unitary.adjoint();
    conj = ((conj + conj.adjoint()) / 2.0).eval();
    const HermEig rotated = herm_eig(MatX(conj));
    CHECK((base.values - rotated.values).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  MatX m = MatX::Zero(3, 3);
  m(0, 1) = cxd(1.0, 0.0);  // missing the conjugate partner
  CHECK_THROWS_AS(herm_eig(m), std::invalid_argument);
}

TEST_CASE("numerical rank") {
  CHECK(numerical_rank(MatX::Zero(9, 9)) == 0);

  std::mt19937_64 rng(17);
  std::vector<Vec9> cols;
  for (int k = 0; k < 4; ++k)
    cols.push_back(kron(random_unit_vec3(rng), random_unit_vec3(rng)));
  const Mat9 proj = projector_onto_span(cols, 4);
  CHECK(numerical_rank(MatX(proj)) == 4);

  const DensityMatrix rho = build_state(build_upb({0.8, 1.9, 0.5, 1.1}));
  CHECK(numerical_rank(MatX(rho.mat)) == 4);
}

TEST_CASE("phase fixing gives a deterministic representative") {
  std::mt19937_64 rng(18);
  const Vec3 v = random_unit_vec3(rng);
  const Vec3 fixed = phase_fixed(v);
  CHECK(std::abs(fixed.norm() - 1.0) < 1e-14);
  CHECK(fixed(0).imag() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fixed(0).real() > 0.0);
  // Any phase multiple lands on the same representative.
  const Vec3 rotated = v * std::polar(1.0, 1.234);
  CHECK((phase_fixed(rotated) - fixed).norm() < 1e-13);
}

TEST_CASE("projector_onto_span rejects deficient spans") {
  std::mt19937_64 rng(19);
  const Vec9 psi = kron(random_unit_vec3(rng), random_unit_vec3(rng));
  std::vector<Vec9> cols{psi, psi};
  CHECK_THROWS_AS(projector_onto_span(cols, 2), std::invalid_argument);
}

}  // TEST_SUITE
