#include "pptupb/json_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>

namespace pptupb {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& context) {
  if (!j.is_object()) throw JsonFormatError(context + ": expected an object");
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key()))
      throw JsonFormatError(context + ": unknown key \"" + item.key() + "\"");
  }
}

const json& require_key(const json& j, const std::string& key,
                        const std::string& context) {
  if (!j.is_object() || !j.contains(key))
    throw JsonFormatError(context + ": missing key \"" + key + "\"");
  return j.at(key);
}

double require_finite(const json& j, const std::string& context) {
  if (!j.is_number()) throw JsonFormatError(context + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw JsonFormatError(context + ": non-finite number");
  return x;
}

}  // namespace

nlohmann::json complex_to_json(const cxd& z) {
  return json::array({z.real(), z.imag()});
}

cxd complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw JsonFormatError("complex number: expected [re, im]");
  return {require_finite(j[0], "complex number"), require_finite(j[1], "complex number")};
}

nlohmann::json matrix_to_json(const MatX& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatX matrix_from_json(const nlohmann::json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw JsonFormatError("matrix: expected " + std::to_string(rows) + " rows");
  MatX m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw JsonFormatError("matrix: expected " + std::to_string(cols) + " columns");
    for (int k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[k]);
  }
  return m;
}

nlohmann::json vector_to_json(const Vec3& v) {
  json out = json::array();
  for (int k = 0; k < 3; ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

Vec3 vec3_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3)
    throw JsonFormatError("vector: expected 3 complex entries");
  Vec3 v;
  for (int k = 0; k < 3; ++k) v(k) = complex_from_json(j[k]);
  return v;
}

nlohmann::json params_to_json(const UpbParams& p) {
  return json::array({p.a, p.b, p.c, p.d});
}

UpbParams params_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4)
    throw JsonFormatError("params: expected [a, b, c, d]");
  UpbParams p{require_finite(j[0], "params"), require_finite(j[1], "params"),
              require_finite(j[2], "params"), require_finite(j[3], "params")};
  return p;
}

nlohmann::json state_to_json(const DensityMatrix& rho) {
  return json{{"dim_a", kDimA}, {"dim_b", kDimB}, {"rho", matrix_to_json(rho.mat)}};
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  reject_unknown_keys(j, {"dim_a", "dim_b", "rho"}, "state");
  if (require_key(j, "dim_a", "state").get<int>() != kDimA ||
      require_key(j, "dim_b", "state").get<int>() != kDimB)
    throw JsonFormatError("state: only the 3x3 system is supported");
  const MatX m = matrix_from_json(require_key(j, "rho", "state"), kDim, kDim);
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-8)
    throw JsonFormatError("state: rho deviates from Hermitian by " +
                          std::to_string(herm_dev));
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > 1e-8)
    throw JsonFormatError("state: trace is " + std::to_string(trace) + ", expected 1");
  Mat9 sym = (m + m.adjoint()) / 2.0;
  sym /= sym.trace().real();
  return {sym};
}

nlohmann::json upb_to_json(const Upb& upb) {
  json vectors = json::array();
  for (const auto& pv : upb.vectors)
    vectors.push_back(json{{"phi", vector_to_json(pv.phi)}, {"chi", vector_to_json(pv.chi)}});
  json out{{"vectors", std::move(vectors)}};
  if (upb.origin)
    out["params"] = params_to_json(*upb.origin);
  else
    out["params"] = nullptr;
  return out;
}

Upb upb_from_json(const nlohmann::json& j) {
  reject_unknown_keys(j, {"params", "vectors"}, "upb");
  const json& vectors = require_key(j, "vectors", "upb");
  if (!vectors.is_array() || vectors.size() != 5)
    throw JsonFormatError("upb: expected 5 vectors");
  Upb upb;
  for (const auto& entry : vectors) {
    reject_unknown_keys(entry, {"phi", "chi"}, "upb vector");
    upb.vectors.emplace_back(vec3_from_json(require_key(entry, "phi", "upb vector")),
                             vec3_from_json(require_key(entry, "chi", "upb vector")));
  }
  if (j.contains("params") && !j.at("params").is_null()) {
    const UpbParams p = params_from_json(j.at("params"));
    validate(p);
    upb.origin = p;
  }
  return upb;
}

nlohmann::json transform_to_json(const ProductTransform& t) {
  return json{{"va", matrix_to_json(t.va)}, {"vb", matrix_to_json(t.vb)}};
}

ProductTransform transform_from_json(const nlohmann::json& j) {
  reject_unknown_keys(j, {"va", "vb"}, "transform");
  const Mat3 va = matrix_from_json(require_key(j, "va", "transform"), 3, 3);
  const Mat3 vb = matrix_from_json(require_key(j, "vb", "transform"), 3, 3);
  try {
    return ProductTransform::from_matrices(va, vb);
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(std::string("transform: ") + e.what());
  }
}

nlohmann::json vectors_to_json(const ProductVectorSet& set) {
  json out = json::array();
  for (std::size_t k = 0; k < set.vectors.size(); ++k) {
    out.push_back(json{{"phi", vector_to_json(set.vectors[k].phi)},
                       {"chi", vector_to_json(set.vectors[k].chi)},
                       {"objective", set.objectives[k]}});
  }
  return out;
}

nlohmann::json certificate_to_json(const StateCertificate& cert) {
  const char* entangled = nullptr;
  switch (cert.entanglement.status) {
    case EntanglementStatus::kEntangled: entangled = "yes"; break;
    case EntanglementStatus::kProductVectorInImage: entangled = "no"; break;
    case EntanglementStatus::kIndeterminate: entangled = "indeterminate"; break;
  }
  json out{
      {"is_ppt", cert.ppt.ppt},
      {"ppt_witness", cert.ppt.min_eigenvalue_pt},
      {"rank", cert.ranks.rank},
      {"rank_pt", cert.ranks.rank_pt},
      {"local_rank_a", cert.ranks.local_rank_a},
      {"local_rank_b", cert.ranks.local_rank_b},
      {"entangled", entangled},
      {"entanglement_witness", cert.entanglement.min_objective},
      {"extremal", cert.extremal_checked ? json(cert.extremal.extremal) : json(false)},
  };
  if (cert.extremal_checked) {
    out["extremal_nullity"] = cert.extremal.nullity;
    out["extremal_witness"] = cert.extremal.second_smallest_sv;
  } else {
    out["extremal_nullity"] = nullptr;
    out["extremal_witness"] = nullptr;
  }
  return out;
}

nlohmann::json classification_to_json(const ClassificationReport& report) {
  json invariants = json::array();
  for (const cxd& s : report.invariants.as_array())
    invariants.push_back(complex_to_json(s));
  json orderings = json::array();
  for (const auto& ordering : report.orderings.admissible)
    orderings.push_back(ordering);
  json residuals = json::object();
  for (const auto& [name, value] : report.residuals) residuals[name] = value;
  return json{
      {"params", params_to_json(report.params)},
      {"canonical_params", params_to_json(report.canonical_params)},
      {"invariants", std::move(invariants)},
      {"ordering_used", report.invariants.ordering},
      {"admissible_orderings", std::move(orderings)},
      {"total_orderings_tested", report.orderings.total_tested},
      {"transform", transform_to_json(report.transform)},
      {"kernel_vectors", vectors_to_json(report.kernel_vectors)},
      {"residuals", std::move(residuals)},
  };
}

nlohmann::json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonFormatError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw JsonFormatError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace pptupb
