#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "pptupb/product_search.hpp"
#include "pptupb/tensor.hpp"
#include "pptupb/transform.hpp"
#include "pptupb/upb.hpp"
#include "pptupb/verify.hpp"

#include "test_util.hpp"

using namespace pptupb;

namespace {

// Independent oracle for the unextendibility check: minimize psi^dag P psi
// over *real* product states on a 4-dimensional grid (two spherical angles per
// factor cover the real projective plane), then refine around the best cell.
double real_grid_min(const Mat9& proj) {
  auto direction = [](double u, double v) {
    return Vec3(std::cos(u), std::sin(u) * std::cos(v), std::sin(u) * std::sin(v));
  };
  auto value = [&](double u1, double v1, double u2, double v2) {
    const Vec9 psi = kron(direction(u1, v1), direction(u2, v2));
    return std::real(psi.dot(proj * psi));
  };

  const double pi = std::numbers::pi;
  double best = 1.0;
  double at[4] = {0, 0, 0, 0};
  const int n = 18;
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2) {
          const double u1 = pi * i1 / n, v1 = pi * j1 / n;
          const double u2 = pi * i2 / n, v2 = pi * j2 / n;
          const double val = value(u1, v1, u2, v2);
          if (val < best) {
            best = val;
            at[0] = u1; at[1] = v1; at[2] = u2; at[3] = v2;
          }
        }
  double half = pi / n;
  for (int round = 0; round < 8; ++round) {
    double local_best = best;
    double local_at[4] = {at[0], at[1], at[2], at[3]};
    const int m = 5;
    for (int i1 = -m; i1 <= m; ++i1)
      for (int j1 = -m; j1 <= m; ++j1)
        for (int i2 = -m; i2 <= m; ++i2)
          for (int j2 = -m; j2 <= m; ++j2) {
            const double val = value(at[0] + half * i1 / m, at[1] + half * j1 / m,
                                     at[2] + half * i2 / m, at[3] + half * j2 / m);
            if (val < local_best) {
              local_best = val;
              local_at[0] = at[0] + half * i1 / m;
              local_at[1] = at[1] + half * j1 / m;
              local_at[2] = at[2] + half * i2 / m;
              local_at[3] = at[3] + half * j2 / m;
            }
          }
    best = local_best;
    for (int k = 0; k < 4; ++k) at[k] = local_at[k];
    half /= m;
  }
  return best;
}

}  // namespace

TEST_SUITE("upb") {

TEST_CASE("build_u at (1,1) matches the printed form") {
  const MatX u = build_u(1.0, 1.0);
  MatX expected(3, 5);
  expected << 1, 0, 1, 1, 0,
              0, 1, 0, 1, 1,
              0, 0, 1, -1, 1;
  CHECK((u - expected).norm() == 0.0);
}

TEST_CASE("build_v at (1,1) matches the printed form") {
  const MatX v = build_v(1.0, 1.0);
  MatX expected(3, 5);
  expected << 1, 1, 0, 0, 1,
              0, 1, 1, 1, 0,
              0, -1, 0, 1, 1;
  CHECK((v - expected).norm() == 0.0);
}

TEST_CASE("structural identities of the standard form") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const UpbParams p = test_util::random_params(rng);
    const MatX u = build_u(p.a, p.b);
    // Forced zero: col3 . col4 = a b - b a.
    CHECK(std::abs(u.col(2).dot(u.col(3))) == 0.0);
    Mat3 first;
    first << u.col(0), u.col(1), u.col(2);
    CHECK(std::abs(first.determinant() - cxd(p.b, 0)) < 1e-15 * p.b);

    const MatX v = build_v(p.c, p.d);
    CHECK(std::abs(v.col(1).dot(v.col(4))) == 0.0);
    CHECK(std::abs(v.col(0).dot(v.col(2))) == 0.0);
  }
}

TEST_CASE("builders reject non-positive parameters") {
  CHECK_THROWS_AS(build_u(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_u(1.0, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(build_v(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_upb({1.0, 1.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("all ten orthogonality relations hold for the standard form") {
  const Upb upb = build_upb({1.0, 1.0, 1.0, 1.0});
  const OrthogonalityReport report = check_orthogonality_graph(upb);
  CHECK(report.max_residual() < 1e-15);

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    const Upb random_upb = build_upb(test_util::random_params(rng));
    CHECK(check_orthogonality_graph(random_upb).max_residual() < 1e-14);
  }
}

TEST_CASE("any three A factors are linearly independent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Upb upb = build_upb(test_util::random_params(rng));
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) {
          Mat3 m;
          m << upb.vectors[i].phi, upb.vectors[j].phi, upb.vectors[k].phi;
          CHECK(std::abs(m.determinant()) > 1e-8);
          Mat3 n;
          n << upb.vectors[i].chi, upb.vectors[j].chi, upb.vectors[k].chi;
          CHECK(std::abs(n.determinant()) > 1e-8);
        }
  }
}

TEST_CASE("orthogonality pattern fails after a transform or a bad ordering") {
  const Upb upb = build_upb({1.4, 0.6, 1.1, 0.9});
  const ProductTransform t = random_product_transform(77);
  const Upb skewed = apply_to_kernel_vectors(t, upb);
  CHECK(check_orthogonality_graph(skewed).max_residual() > 0.01);

  Upb permuted = upb;
  std::swap(permuted.vectors[1], permuted.vectors[2]);
  CHECK(check_orthogonality_graph(permuted).max_residual() > 0.01);
}

TEST_CASE("build_state yields the projection-complement state") {
  const Upb upb = build_upb({1.0, 2.0, 0.5, 1.5});
  const DensityMatrix rho = build_state(upb);

  CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-14);
  for (const auto& pv : upb.vectors) CHECK((rho.mat * pv.psi).norm() < 1e-12);

  // Projection property: (4 rho)^2 = 4 rho.
  const Mat9 scaled = 4.0 * rho.mat;
  CHECK((scaled * scaled - scaled).norm() < 1e-10);

  CHECK(numerical_rank(MatX(rho.mat)) == 4);
  CHECK(numerical_rank(MatX(partial_transpose(rho.mat))) == 4);
}

TEST_CASE("build_state rejects deficient spans") {
  Upb upb = build_upb({1.0, 1.0, 1.0, 1.0});
  upb.vectors[4] = upb.vectors[0];
  CHECK_THROWS_AS(build_state(upb), std::invalid_argument);
}

TEST_CASE("state properties across random parameters") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = build_state(build_upb(test_util::random_params(rng)));
    const HermEig eig = herm_eig(MatX(rho.mat));
    CHECK(eig.values(0) > -1e-12);
    const RankReport ranks = rank_pair(rho);
    CHECK(ranks.rank == 4);
    CHECK(ranks.rank_pt == 4);
    CHECK(ranks.local_rank_a == 3);
    CHECK(ranks.local_rank_b == 3);
  }
}

TEST_CASE("unextendibility of the (1,1,1,1) UPB") {
  const Upb upb = build_upb({1.0, 1.0, 1.0, 1.0});
  std::vector<Vec9> cols;
  for (const auto& pv : upb.vectors) cols.push_back(pv.psi);
  const Mat9 proj = projector_onto_span(cols, 5);

  // Route 1: restarted see-saw over complex product states.
  SearchConfig cfg = test_util::quick_search(31, 200);
  std::mt19937_64 rng(cfg.seed);
  double seesaw_min = 1.0;
  for (int r = 0; r < cfg.restarts; ++r) {
    const ProductVector start = test_util::random_product_vector(rng);
    seesaw_min = std::min(seesaw_min, seesaw_minimize(proj, cfg, start).objective);
  }
  CHECK(seesaw_min > 1e-6);

  // Route 2: 4-dimensional grid with refinement over real product states.
  CHECK(real_grid_min(proj) > 1e-6);
}

}  // TEST_SUITE
