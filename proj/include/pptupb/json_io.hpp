#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "pptupb/orthogonalizer.hpp"
#include "pptupb/product_search.hpp"
#include "pptupb/transform.hpp"
#include "pptupb/types.hpp"
#include "pptupb/upb.hpp"
#include "pptupb/verify.hpp"

// Shared serialization conventions: complex numbers are two-element arrays
// [re, im]; matrices are row-major nested arrays of complex entries.

namespace pptupb {

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json complex_to_json(const cxd& z);
cxd complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const MatX& m);
MatX matrix_from_json(const nlohmann::json& j, int rows, int cols);

nlohmann::json vector_to_json(const Vec3& v);
Vec3 vec3_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const UpbParams& p);
UpbParams params_from_json(const nlohmann::json& j);

// state.json: {"dim_a": 3, "dim_b": 3, "rho": 9x9}. The loader rejects unknown
// keys, non-Hermitian input (beyond 1e-8) and traces away from 1 (beyond 1e-8),
// then symmetrizes and renormalizes exactly.
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

// upb.json: {"params": [a,b,c,d], "vectors": [{"phi": .., "chi": ..} x5]};
// "params" may be null for sets without a standard-form origin.
nlohmann::json upb_to_json(const Upb& upb);
Upb upb_from_json(const nlohmann::json& j);

// transform.json: {"va": 3x3, "vb": 3x3}.
nlohmann::json transform_to_json(const ProductTransform& t);
ProductTransform transform_from_json(const nlohmann::json& j);

// vectors.json: [{"phi": .., "chi": .., "objective": r}, ...].
nlohmann::json vectors_to_json(const ProductVectorSet& set);

nlohmann::json certificate_to_json(const StateCertificate& cert);
nlohmann::json classification_to_json(const ClassificationReport& report);

nlohmann::json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace pptupb
