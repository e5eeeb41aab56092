#pragma once

#include "pptupb/product_search.hpp"
#include "pptupb/types.hpp"

namespace pptupb {

struct PptResult {
  bool ppt;
  double min_eigenvalue_pt;  // witness: smallest eigenvalue of rho^P
};

// PPT iff the smallest eigenvalue of the partial transpose is > -1e-10.
PptResult is_ppt(const DensityMatrix& rho);

struct RankReport {
  int rank, rank_pt;
  int local_rank_a, local_rank_b;
};

RankReport rank_pair(const DensityMatrix& rho, double rel_tol = 1e-8);

enum class EntanglementStatus {
  kEntangled,              // min psi^dag (1 - P_im) psi > 1e-6 over product psi
  kProductVectorInImage,   // minimum below 1e-10
  kIndeterminate,          // minimum in [1e-10, 1e-6]: never silently coerced
};

struct EntanglementResult {
  EntanglementStatus status;
  double min_objective;  // witness

  bool entangled() const { return status == EntanglementStatus::kEntangled; }
};

// One-sided certificate: no product vector in Im rho implies entanglement.
// The minimum is sampled by restarted see-saw.
EntanglementResult is_entangled_by_image(const DensityMatrix& rho,
                                         const SearchConfig& config);

struct ExtremalResult {
  bool extremal;
  int nullity;                // dim{H Hermitian : Im H in Im rho, Im H^P in Im rho^P}
  double second_smallest_sv;  // witness, singular value of the constraint map
};

// Extremal iff the constraint space above is one-dimensional (spanned by rho
// itself). Pre: rho is PPT; throws std::invalid_argument otherwise.
ExtremalResult is_extremal(const DensityMatrix& rho);

struct StateCertificate {
  PptResult ppt;
  RankReport ranks;
  EntanglementResult entanglement;
  bool extremal_checked;  // false when the PPT precondition fails
  ExtremalResult extremal;
};

StateCertificate certify(const DensityMatrix& rho, const SearchConfig& config);

}  // namespace pptupb
