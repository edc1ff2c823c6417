#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "solvcert/catalog.hpp"
#include "solvcert/lie_algebra.hpp"
#include "solvcert/presentation.hpp"
#include "solvcert/representation.hpp"
#include "solvcert/solvability.hpp"
#include "solvcert/triangular_exp.hpp"

namespace solvcert {

using json = nlohmann::json;

// --- file formats ----------------------------------------------------------

/// {"name": str, "dim": n, "basis": [names],
///  "brackets": [{"left": a, "right": b, "result": {name: "p/q", ...}}]}
/// Unlisted brackets are zero; listing both (a,b) and (b,a) is an error
/// unless the two are exactly antisymmetric.  Throws ParseError with the
/// offending field path.
LieAlgebra algebra_from_json(const json& j);
json algebra_to_json(const LieAlgebra& g, const std::string& name = "");

/// {"f": <algebra>, "torus_rank": m, "derivations": [row-major matrices]}
GroupPresentation presentation_from_json(const json& j);
json presentation_to_json(const GroupPresentation& p,
                          const std::string& name = "");

RatMatrix matrix_from_json(const json& j, const std::string& where);
json matrix_to_json(const RatMatrix& m);
json matrix_to_json(const Eigen::MatrixXd& m);

// --- result payloads -------------------------------------------------------

json poly_to_json(const Poly& p);
json subspace_to_json(const Subspace& s);
json verdict_to_json(const SolvabilityVerdict& v);
json weight_report_to_json(const WeightReport& r);
json flag_to_json(const Flag& f);
json definability_to_json(const DefinabilityVerdict& v);
json representation_to_json(const Representation& r);
json exp_matrix_to_json(const ExpMatrix& m);
json catalog_entry_to_json(const CatalogEntry& e);

// --- reports ---------------------------------------------------------------

/// 64-bit FNV-1a content digest, "fnv1a64:<hex>".
std::string content_digest(const std::string& bytes);

/// Structural validation of a value against the subset of JSON Schema used
/// by the shipped report schema (type / required / properties / items /
/// enum).  Returns human-readable violations, empty when valid.
std::vector<std::string> schema_violations(const json& schema,
                                           const json& value,
                                           const std::string& path = "$");

}  // namespace solvcert
