#include "pptupb/product_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "pptupb/rng.hpp"

namespace pptupb {

namespace {

// A(chi)_{ii'} = sum_{jj'} conj(chi_j) q((i,j),(i',j')) chi_{j'}
//             = chi^dag q.block(3i, 3i') chi.
Mat3 reduce_onto_a(const Mat9& q, const Vec3& chi) {
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int ip = 0; ip < 3; ++ip)
      a(i, ip) = chi.dot(q.block<3, 3>(3 * i, 3 * ip) * chi);
  return a;
}

// B(phi)_{jj'} = sum_{ii'} conj(phi_i) q((i,j),(i',j')) phi_{i'}.
Mat3 reduce_onto_b(const Mat9& q, const Vec3& phi) {
  Mat3 b = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int ip = 0; ip < 3; ++ip)
      b += std::conj(phi(i)) * phi(ip) * q.block<3, 3>(3 * i, 3 * ip);
  return b;
}

double objective_of(const Mat9& q, const Vec9& psi) {
  return std::real(psi.dot(q * psi));
}

Vec3 min_eigvec(const Mat3& m) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver((m + m.adjoint()) / 2.0);
  return solver.eigenvectors().col(0);
}

ProductVector random_product_vector(std::mt19937_64& rng) {
  const Vec3 phi = random_unit_vec3(rng);
  const Vec3 chi = random_unit_vec3(rng);
  return {phi, chi};
}

// Drive an accepted candidate to its floating-point floor: same iteration with
// the decrease threshold removed, so it only stops on a non-improving sweep.
SeesawResult polish(const Mat9& q, const SearchConfig& config, const ProductVector& at) {
  SearchConfig polish_config = config;
  polish_config.conv_tol = 0.0;
  polish_config.max_iters = 150;
  return seesaw_minimize(q, polish_config, at);
}

struct Candidate {
  ProductVector vector;
  double objective;
};

// Phase-fixed lexicographic order, so that merging does not depend on the
// restart order that produced the candidates.
bool lex_less(const Candidate& x, const Candidate& y) {
  for (int k = 0; k < 3; ++k) {
    const cxd a = x.vector.phi(k), b = y.vector.phi(k);
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
  }
  for (int k = 0; k < 3; ++k) {
    const cxd a = x.vector.chi(k), b = y.vector.chi(k);
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
  }
  return false;
}

bool projectively_same(const ProductVector& x, const ProductVector& y, double tol) {
  return projective_distance(x.phi, y.phi) <= tol &&
         projective_distance(x.chi, y.chi) <= tol;
}

ProductVectorSet collect_minima(const Mat9& q, const SearchConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<Candidate> candidates;
  for (int r = 0; r < config.restarts; ++r) {
    const ProductVector start = random_product_vector(rng);
    SeesawResult result = seesaw_minimize(q, config, start);
    if (result.objective < config.success_tol) {
      result = polish(q, config, result.vector);
      candidates.push_back({result.vector, result.objective});
    }
  }
  std::sort(candidates.begin(), candidates.end(), lex_less);
  ProductVectorSet set;
  for (const auto& cand : candidates) {
    bool duplicate = false;
    for (const auto& kept : set.vectors) {
      if (projectively_same(cand.vector, kept, config.dedup_tol)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      set.vectors.push_back(cand.vector);
      set.objectives.push_back(cand.objective);
    }
  }
  return set;
}

}  // namespace

SeesawResult seesaw_minimize(const Mat9& q, const SearchConfig& config,
                             const ProductVector& start) {
  Vec3 phi = start.phi.normalized();
  Vec3 chi = start.chi.normalized();
  double objective = objective_of(q, kron(phi, chi));
  Vec3 best_phi = phi, best_chi = chi;
  double best = objective;
  int iterations = 0;
  for (int iter = 0; iter < config.max_iters; ++iter) {
    phi = min_eigvec(reduce_onto_a(q, chi));
    chi = min_eigvec(reduce_onto_b(q, phi));
    const double next = objective_of(q, kron(phi, chi));
    ++iterations;
    if (next < best) {
      best = next;
      best_phi = phi;
      best_chi = chi;
    }
    const double decrease = objective - next;
    objective = next;
    if (decrease < config.conv_tol) break;
  }
  return {ProductVector(best_phi, best_chi), best, iterations};
}

ProductVectorSet find_product_vectors_in_kernel(const DensityMatrix& rho,
                                                const SearchConfig& config) {
  return collect_minima(rho.mat, config);
}

ProductVector find_sixth_vector(const Upb& upb, const SearchConfig& config) {
  if (upb.vectors.size() != 5)
    throw std::invalid_argument("find_sixth_vector: expected 5 product vectors");
  std::vector<Vec9> columns;
  columns.reserve(5);
  for (const auto& pv : upb.vectors) columns.push_back(pv.psi);
  const Mat9 proj = projector_onto_span(columns, 5);
  Mat9 q = Mat9::Identity() - proj;
  q = (q + q.adjoint()) / 2.0;

  const ProductVectorSet in_span = collect_minima(q, config);
  std::vector<ProductVector> fresh;
  for (const auto& found : in_span.vectors) {
    bool known = false;
    for (const auto& member : upb.vectors) {
      if (projectively_same(found, member, config.dedup_tol)) {
        known = true;
        break;
      }
    }
    if (!known) fresh.push_back(found);
  }
  if (fresh.empty())
    throw DegeneracyError(
        "find_sixth_vector: no product vector beyond the input set "
        "(degenerate configuration)");
  if (fresh.size() > 1)
    throw DegeneracyError(
        "find_sixth_vector: " + std::to_string(fresh.size() + 5) +
        " product vectors in the span (non-generic subspace)");
  return fresh.front();
}

}  // namespace pptupb
