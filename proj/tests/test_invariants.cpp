#include "doctest.h"

#include <random>

#include "pptupb/invariants.hpp"
#include "pptupb/product_search.hpp"
#include "pptupb/rng.hpp"
#include "pptupb/transform.hpp"
#include "pptupb/upb.hpp"

#include "test_util.hpp"

using namespace pptupb;

namespace {

std::vector<ProductVector> kernel_six(const Upb& upb, std::uint64_t seed) {
  std::vector<ProductVector> six = upb.vectors;
  six.push_back(find_sixth_vector(upb, test_util::quick_search(seed, 200)));
  return six;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("standard form evaluates to (a^2, b^2/a^2, c^2, d^2/c^2)") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 25; ++trial) {
    const UpbParams p = test_util::random_params(rng);
    const Upb upb = build_upb(p);
    const InvariantTuple s = compute_invariants(upb.vectors);
    CHECK(s.s1.real() == doctest::Approx(p.a * p.a).epsilon(1e-12));
    CHECK(s.s2.real() == doctest::Approx(p.b * p.b / (p.a * p.a)).epsilon(1e-12));
    CHECK(s.s3.real() == doctest::Approx(p.c * p.c).epsilon(1e-12));
    CHECK(s.s4.real() == doctest::Approx(p.d * p.d / (p.c * p.c)).epsilon(1e-12));
    CHECK(std::abs(s.s1.imag()) < 1e-14);
    CHECK(std::abs(s.s2.imag()) < 1e-14);
    CHECK(std::abs(s.s3.imag()) < 1e-14);
    CHECK(std::abs(s.s4.imag()) < 1e-14);
  }
}

TEST_CASE("invariance under per-column complex rescaling") {
  std::mt19937_64 rng(82);
  Upb upb = build_upb({1.9, 0.4, 1.2, 2.6});
  const InvariantTuple base = compute_invariants(upb.vectors);

  // compute_invariants renormalizes, so rescaling a factor can at most move
  // its phase; perturb each member by a random phase and magnitude.
  std::vector<ProductVector> rescaled;
  for (const auto& pv : upb.vectors) {
    const cxd za = (0.2 + uniform01(rng)) * std::polar(1.0, 6.28 * uniform01(rng));
    const cxd zb = (0.2 + uniform01(rng)) * std::polar(1.0, 6.28 * uniform01(rng));
    rescaled.emplace_back(Vec3(za * pv.phi), Vec3(zb * pv.chi));
  }
  const InvariantTuple scaled = compute_invariants(rescaled);
  const auto b = base.as_array(), s = scaled.as_array();
  for (int k = 0; k < 4; ++k) CHECK(std::abs(b[k] - s[k]) < 1e-12 * (1.0 + std::abs(b[k])));
}

TEST_CASE("invariance under SL(x)SL maps of the factors") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    const Upb upb = build_upb(test_util::random_params(rng, 0.3, 3.0));
    const InvariantTuple base = compute_invariants(upb.vectors);
    const ProductTransform t = random_product_transform(1000 + trial);
    const Upb mapped = apply_to_kernel_vectors(t, upb);
    const InvariantTuple moved = compute_invariants(mapped.vectors);
    const auto x = base.as_array(), y = moved.as_array();
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(x[k] - y[k]) < 1e-9 * (1.0 + std::abs(x[k])));
  }
}

TEST_CASE("degenerate configurations are rejected") {
  const Upb upb = build_upb({1.0, 1.0, 1.0, 1.0});
  std::vector<ProductVector> vectors = upb.vectors;
  // Force phi_1 parallel to phi_0: every denominator containing both collapses.
  vectors[1] = ProductVector(vectors[0].phi, vectors[1].chi);
  CHECK_THROWS_AS(compute_invariants(vectors), DegeneracyError);
}

TEST_CASE("recover_parameters inverts the closed forms") {
  InvariantTuple s;
  s.s1 = 4.0;
  s.s2 = 0.25;
  s.s3 = 9.0;
  s.s4 = 1.0 / 9.0;
  const UpbParams p = recover_parameters(s);
  CHECK(p.a == doctest::Approx(2.0));
  CHECK(p.b == doctest::Approx(1.0));
  CHECK(p.c == doctest::Approx(3.0));
  CHECK(p.d == doctest::Approx(1.0));

  InvariantTuple ones;
  ones.s1 = ones.s2 = ones.s3 = ones.s4 = 1.0;
  const UpbParams unit = recover_parameters(ones);
  CHECK(unit.a == doctest::Approx(1.0));
  CHECK(unit.b == doctest::Approx(1.0));
  CHECK(unit.c == doctest::Approx(1.0));
  CHECK(unit.d == doctest::Approx(1.0));

  InvariantTuple bad = ones;
  bad.s2 = -1.0;
  CHECK_THROWS_AS(recover_parameters(bad), std::invalid_argument);
  bad.s2 = cxd(1.0, 0.5);
  CHECK_THROWS_AS(recover_parameters(bad), std::invalid_argument);
}

TEST_CASE("round trip: params -> UPB -> invariants -> params") {
  std::mt19937_64 rng(84);
  for (int trial = 0; trial < 20; ++trial) {
    const UpbParams p = test_util::random_params(rng);
    const UpbParams q = recover_parameters(compute_invariants(build_upb(p).vectors));
    CHECK(q.a == doctest::Approx(p.a).epsilon(1e-12));
    CHECK(q.b == doctest::Approx(p.b).epsilon(1e-12));
    CHECK(q.c == doctest::Approx(p.c).epsilon(1e-12));
    CHECK(q.d == doctest::Approx(p.d).epsilon(1e-12));
  }
}

TEST_CASE("UPB kernels admit exactly 60 orderings, 10 per excluded vector") {
  const Upb upb = build_upb({1.3, 0.8, 0.6, 1.7});
  const std::vector<ProductVector> six = kernel_six(upb, 85);
  const OrderingReport report = find_positive_orderings(six);
  CHECK(report.total_tested == 720);
  CHECK(report.admissible.size() == 60);
  for (int label = 0; label < 6; ++label)
    CHECK(report.count_for_excluded(label) == 10);
}

TEST_CASE("transformed kernels admit the same 60 orderings") {
  const Upb upb = build_upb({0.7, 1.1, 1.9, 0.5});
  std::vector<ProductVector> six = kernel_six(upb, 86);
  Upb carrier;
  carrier.vectors = six;
  const Upb mapped = apply_to_kernel_vectors(random_product_transform(87), carrier);
  const OrderingReport report = find_positive_orderings(mapped.vectors);
  CHECK(report.admissible.size() == 60);
}

TEST_CASE("random product-vector sets admit no ordering") {
  std::mt19937_64 rng(88);
  const SearchConfig cfg = test_util::quick_search(89, 200);
  for (int trial = 0; trial < 5; ++trial) {
    Upb random_set;
    for (int k = 0; k < 5; ++k)
      random_set.vectors.push_back(test_util::random_product_vector(rng));
    std::vector<ProductVector> six = random_set.vectors;
    six.push_back(find_sixth_vector(random_set, cfg));
    const OrderingReport report = find_positive_orderings(six);
    CHECK(report.admissible.size() == 0);
  }
}

}  // TEST_SUITE
