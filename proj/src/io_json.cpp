#include "solvcert/io_json.hpp"

#include <map>

#include "solvcert/errors.hpp"

namespace solvcert {

namespace {

const json& require_field(const json& j, const std::string& key,
                          const std::string& where) {
  if (!j.is_object())
    throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key, "missing field");
  return *it;
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

Rat parse_rational(const json& j, const std::string& where) {
  if (!j.is_string())
    throw ParseError(where, "expected a rational string \"p/q\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const InvalidInput& e) {
    throw ParseError(where, e.what());
  }
}

}  // namespace

LieAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("$", "algebra file must be an object");
  int dim = require_int(require_field(j, "dim", "$"), "$.dim");
  if (dim < 0) throw ParseError("$.dim", "dimension must be nonnegative");
  const json& basis = require_field(j, "basis", "$");
  if (!basis.is_array() || static_cast<int>(basis.size()) != dim)
    throw ParseError("$.basis", "expected an array of dim basis names");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (int i = 0; i < dim; ++i) {
    std::string n =
        require_string(basis[i], "$.basis[" + std::to_string(i) + "]");
    if (index.count(n))
      throw ParseError("$.basis[" + std::to_string(i) + "]",
                       "duplicate basis name '" + n + "'");
    index[n] = i;
    names.push_back(std::move(n));
  }

  std::map<std::pair<int, int>, RatVec> raw;
  if (j.contains("brackets")) {
    const json& brackets = j.at("brackets");
    if (!brackets.is_array())
      throw ParseError("$.brackets", "expected an array");
    for (size_t t = 0; t < brackets.size(); ++t) {
      std::string where = "$.brackets[" + std::to_string(t) + "]";
      const json& b = brackets[t];
      std::string left = require_string(require_field(b, "left", where),
                                        where + ".left");
      std::string right = require_string(require_field(b, "right", where),
                                         where + ".right");
      if (!index.count(left))
        throw ParseError(where + ".left", "unknown basis name '" + left + "'");
      if (!index.count(right))
        throw ParseError(where + ".right",
                         "unknown basis name '" + right + "'");
      int i = index[left], k = index[right];
      const json& result = require_field(b, "result", where);
      if (!result.is_object())
        throw ParseError(where + ".result", "expected an object");
      RatVec v(dim, Rat(0));
      for (const auto& [key, val] : result.items()) {
        if (!index.count(key))
          throw ParseError(where + ".result." + key,
                           "unknown basis name '" + key + "'");
        v[index[key]] = parse_rational(val, where + ".result." + key);
      }
      if (i == k) {
        if (!is_zero(v))
          throw ParseError(where, "bracket of '" + left +
                                      "' with itself must be zero");
        continue;
      }
      if (raw.count({i, k}))
        throw ParseError(where, "bracket (" + left + ", " + right +
                                    ") listed twice");
      raw[{i, k}] = std::move(v);
    }
  }

  std::vector<RatVec> constants;
  for (int i = 0; i < dim; ++i)
    for (int k = i + 1; k < dim; ++k) {
      auto fwd = raw.find({i, k});
      auto rev = raw.find({k, i});
      if (fwd != raw.end() && rev != raw.end()) {
        if (fwd->second != Rat(-1) * rev->second)
          throw ParseError("$.brackets",
                           "brackets (" + names[i] + ", " + names[k] +
                               ") and (" + names[k] + ", " + names[i] +
                               ") are listed but not antisymmetric");
        constants.push_back(fwd->second);
      } else if (fwd != raw.end()) {
        constants.push_back(fwd->second);
      } else if (rev != raw.end()) {
        constants.push_back(Rat(-1) * rev->second);
      } else {
        constants.push_back(RatVec(dim, Rat(0)));
      }
    }
  return LieAlgebra(dim, std::move(names), std::move(constants));
}

json algebra_to_json(const LieAlgebra& g, const std::string& name) {
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int k = i + 1; k < g.dim(); ++k) {
      RatVec v = g.bracket_basis(i, k);
      if (is_zero(v)) continue;
      json result = json::object();
      for (int t = 0; t < g.dim(); ++t)
        if (!v[t].is_zero()) result[g.basis_name(t)] = v[t].str();
      brackets.push_back({{"left", g.basis_name(i)},
                          {"right", g.basis_name(k)},
                          {"result", result}});
    }
  json out = {{"dim", g.dim()},
              {"basis", g.basis_names()},
              {"brackets", brackets}};
  if (!name.empty()) out["name"] = name;
  return out;
}

RatMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ParseError(where, "expected a nonempty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = -1;
  std::vector<RatVec> data;
  for (int r = 0; r < rows; ++r) {
    std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) throw ParseError(rw, "expected a row array");
    if (cols < 0)
      cols = static_cast<int>(j[r].size());
    else if (static_cast<int>(j[r].size()) != cols)
      throw ParseError(rw, "ragged rows");
    RatVec row;
    for (int c = 0; c < cols; ++c)
      row.push_back(parse_rational(j[r][c], rw + "[" + std::to_string(c) + "]"));
    data.push_back(std::move(row));
  }
  return RatMatrix::from_rows(data);
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupPresentation presentation_from_json(const json& j) {
  if (!j.is_object())
    throw ParseError("$", "presentation file must be an object");
  GroupPresentation p{algebra_from_json(require_field(j, "f", "$")), 0, {}};
  p.torus_rank = require_int(require_field(j, "torus_rank", "$"),
                             "$.torus_rank");
  if (p.torus_rank < 0)
    throw ParseError("$.torus_rank", "torus rank must be nonnegative");
  const json& ders = require_field(j, "derivations", "$");
  if (!ders.is_array())
    throw ParseError("$.derivations", "expected an array of matrices");
  for (size_t t = 0; t < ders.size(); ++t)
    p.derivations.push_back(matrix_from_json(
        ders[t], "$.derivations[" + std::to_string(t) + "]"));
  return p;
}

json presentation_to_json(const GroupPresentation& p, const std::string& name) {
  json ders = json::array();
  for (const RatMatrix& d : p.derivations) ders.push_back(matrix_to_json(d));
  json out = {{"f", algebra_to_json(p.f)},
              {"torus_rank", p.torus_rank},
              {"derivations", ders}};
  if (!name.empty()) out["name"] = name;
  return out;
}

json poly_to_json(const Poly& p) {
  json coeffs = json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(c.str());
  return coeffs;
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const RatVec& v : s.basis_vectors()) {
    json row = json::array();
    for (const Rat& x : v) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", rows}};
}

json verdict_to_json(const SolvabilityVerdict& v) {
  json out = {{"kind", to_string(v.kind)}};
  if (v.stabilized_derived)
    out["stabilized_derived"] = subspace_to_json(*v.stabilized_derived);
  if (v.witness) {
    out["witness"] = {{"basis_index", v.witness->basis_index},
                      {"basis_name", v.witness->basis_name},
                      {"char_poly", poly_to_json(v.witness->characteristic)},
                      {"square_free", poly_to_json(v.witness->square_free)},
                      {"factor", poly_to_json(v.witness->factor)},
                      {"distinct_real_roots", v.witness->distinct_real_roots},
                      {"real_root_deficit", v.witness->real_root_deficit}};
  }
  return out;
}

json weight_report_to_json(const WeightReport& r) {
  json rows = json::array();
  for (const WeightReportRow& row : r.rows)
    rows.push_back({{"basis_index", row.basis_index},
                    {"basis_name", row.basis_name},
                    {"char_poly", poly_to_json(row.characteristic)},
                    {"square_free", poly_to_json(row.square_free)},
                    {"distinct_real_roots", row.distinct_real_roots},
                    {"real_rooted", row.real_rooted}});
  return {{"rows", rows}, {"all_real_rooted", r.all_real_rooted}};
}

json flag_to_json(const Flag& f) {
  json out = {{"mode", f.mode == FlagMode::Exact ? "exact" : "numeric"}};
  json members = json::array();
  if (f.mode == FlagMode::Exact) {
    for (const Subspace& s : f.exact) members.push_back(subspace_to_json(s));
  } else {
    for (const Eigen::MatrixXd& m : f.numeric)
      members.push_back(matrix_to_json(m));
    out["tolerance"] = f.tolerance;
    out["max_residual"] = f.max_residual;
  }
  out["subspaces"] = std::move(members);
  return out;
}

json definability_to_json(const DefinabilityVerdict& v) {
  json certs = json::array();
  for (const ValidationCertificate& c : v.torus_certificates)
    certs.push_back({{"rule", c.rule},
                     {"derivation_index", c.derivation_index},
                     {"detail", c.detail}});
  return {{"kind", to_string(v.kind)},
          {"solvability", verdict_to_json(v.solvability)},
          {"torus_certificates", certs}};
}

json representation_to_json(const Representation& r) {
  json mats = json::array();
  for (const RatMatrix& m : r.matrices) mats.push_back(matrix_to_json(m));
  return {{"target_dim", r.target_dim},
          {"tier", to_string(r.tier)},
          {"matrices", mats},
          {"triangular", r.is_triangular},
          {"faithful", r.is_faithful}};
}

json exp_matrix_to_json(const ExpMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      json terms = json::array();
      for (const auto& [r, q] : m.at(i, c).terms())
        terms.push_back(json::array({q.str(), r.str()}));
      row.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json catalog_entry_to_json(const CatalogEntry& e) {
  json out = {{"name", e.name},
              {"description", e.description},
              {"provenance", e.provenance},
              {"expect_solvable", e.expect_solvable},
              {"expect_nilpotent", e.expect_nilpotent}};
  if (e.expect_solv_kind) out["expect_solv_kind"] = to_string(*e.expect_solv_kind);
  if (e.expect_def_kind) out["expect_def_kind"] = to_string(*e.expect_def_kind);
  if (e.algebra) out["algebra"] = algebra_to_json(*e.algebra, e.name);
  if (e.presentation)
    out["presentation"] = presentation_to_json(*e.presentation, e.name);
  return out;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::vector<std::string> schema_violations(const json& schema,
                                           const json& value,
                                           const std::string& path) {
  std::vector<std::string> out;
  auto type_ok = [&](const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    return false;
  };
  if (schema.contains("type")) {
    const json& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) ok = type_ok(t.get<std::string>());
    else if (t.is_array())
      for (const json& one : t) ok = ok || type_ok(one.get<std::string>());
    if (!ok) {
      out.push_back(path + ": expected type " + t.dump());
      return out;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const json& v : schema.at("enum")) ok = ok || v == value;
    if (!ok) out.push_back(path + ": value not in enum");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const json& k : schema.at("required"))
        if (!value.contains(k.get<std::string>()))
          out.push_back(path + ": missing required field '" +
                        k.get<std::string>() + "'");
    if (schema.contains("properties"))
      for (const auto& [k, sub] : schema.at("properties").items())
        if (value.contains(k)) {
          auto vs = schema_violations(sub, value.at(k), path + "." + k);
          out.insert(out.end(), vs.begin(), vs.end());
        }
  }
  if (value.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < value.size(); ++i) {
      auto vs = schema_violations(schema.at("items"), value[i],
                                  path + "[" + std::to_string(i) + "]");
      out.insert(out.end(), vs.begin(), vs.end());
    }
  }
  return out;
}

}  // namespace solvcert
