#include "solvcert/catalog.hpp"

namespace solvcert {

namespace {

RatVec vec3(long a, long b, long c) { return RatVec{Rat(a), Rat(b), Rat(c)}; }

LieAlgebra heisenberg() {
  return LieAlgebra(3, {"x", "y", "z"},
                    {vec3(0, 0, 1), vec3(0, 0, 0), vec3(0, 0, 0)});
}

LieAlgebra affine_line() {
  return LieAlgebra(2, {"x", "y"}, {RatVec{Rat(0), Rat(1)}});
}

LieAlgebra t2_algebra() {
  return LieAlgebra(3, {"E11", "E22", "E12"},
                    {vec3(0, 0, 0), vec3(0, 0, 1), vec3(0, 0, -1)});
}

LieAlgebra t3_algebra() {
  int n = 6;  // E11 E22 E33 E12 E13 E23
  std::vector<std::string> names{"E11", "E22", "E33", "E12", "E13", "E23"};
  auto unit = [&](int k) {
    RatVec v(n, Rat(0));
    v[k] = Rat(1);
    return v;
  };
  auto zero = [&] { return RatVec(n, Rat(0)); };
  std::vector<RatVec> c;
  // pairs in lexicographic order
  c.push_back(zero());                  // (E11, E22)
  c.push_back(zero());                  // (E11, E33)
  c.push_back(unit(3));                 // (E11, E12) = E12
  c.push_back(unit(4));                 // (E11, E13) = E13
  c.push_back(zero());                  // (E11, E23)
  c.push_back(zero());                  // (E22, E33)
  c.push_back(Rat(-1) * unit(3));       // (E22, E12) = -E12
  c.push_back(zero());                  // (E22, E13)
  c.push_back(unit(5));                 // (E22, E23) = E23
  c.push_back(zero());                  // (E33, E12)
  c.push_back(Rat(-1) * unit(4));       // (E33, E13) = -E13
  c.push_back(Rat(-1) * unit(5));       // (E33, E23) = -E23
  c.push_back(zero());                  // (E12, E13)
  c.push_back(unit(4));                 // (E12, E23) = E13
  c.push_back(zero());                  // (E13, E23)
  return LieAlgebra(n, std::move(names), std::move(c));
}

LieAlgebra s3_algebra() {
  // strictly upper triangular 3x3: E12, E13, E23 with [E12, E23] = E13
  return LieAlgebra(3, {"E12", "E13", "E23"},
                    {vec3(0, 0, 0), vec3(0, 1, 0), vec3(0, 0, 0)});
}

RatMatrix rotation2() {
  RatMatrix d(2, 2);
  d.at(0, 1) = Rat(1);
  d.at(1, 0) = Rat(-1);
  return d;
}

LieAlgebra e2tilde_algebra() {
  return semidirect_sum(LieAlgebra::abelian(2), {rotation2()}, {"X"});
}

LieAlgebra sqrt2_algebra() {
  return LieAlgebra(3, {"x", "e1", "e2"},
                    {vec3(0, 0, 1), vec3(0, 2, 0), vec3(0, 0, 0)});
}

LieAlgebra sl2_algebra() {
  return LieAlgebra(3, {"h", "e", "f"},
                    {vec3(0, 2, 0), vec3(0, 0, -2), vec3(1, 0, 0)});
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  auto algebra_entry = [&](std::string name, std::string description,
                           LieAlgebra g, bool nilpotent, SolvKind kind,
                           std::optional<DefKind> def, std::string provenance) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.algebra = std::move(g);
    e.expect_solvable = kind != SolvKind::NotSolvable;
    e.expect_nilpotent = nilpotent;
    e.expect_solv_kind = kind;
    e.expect_def_kind = def;
    e.provenance = std::move(provenance);
    entries.push_back(std::move(e));
  };

  algebra_entry("abelian-r1", "abelian line", LieAlgebra::abelian(1), true,
                SolvKind::CompletelySolvable, DefKind::Definable,
                "additive group of the reals");
  algebra_entry("abelian-r2", "abelian plane", LieAlgebra::abelian(2), true,
                SolvKind::CompletelySolvable, DefKind::Definable,
                "additive group of the plane");
  algebra_entry("abelian-r3", "abelian 3-space", LieAlgebra::abelian(3), true,
                SolvKind::CompletelySolvable, DefKind::Definable,
                "additive group of 3-space");
  algebra_entry("heisenberg", "Heisenberg algebra, [x,y] = z", heisenberg(),
                true, SolvKind::CompletelySolvable, DefKind::Definable,
                "3-dimensional Heisenberg group");
  algebra_entry("affine-line", "affine line, [x,y] = y", affine_line(), false,
                SolvKind::CompletelySolvable, DefKind::Definable,
                "affine transformations x -> ax + b, a > 0");
  algebra_entry("t2", "upper triangular 2x2 matrices", t2_algebra(), false,
                SolvKind::CompletelySolvable, DefKind::Definable,
                "Borel subgroup of GL(2)");
  algebra_entry("t3", "upper triangular 3x3 matrices", t3_algebra(), false,
                SolvKind::CompletelySolvable, DefKind::Definable,
                "Borel subgroup of GL(3)");
  algebra_entry("s3-strictly-upper", "strictly upper triangular 3x3 matrices",
                s3_algebra(), true, SolvKind::CompletelySolvable,
                DefKind::Definable, "unipotent upper triangular group");
  algebra_entry("e2tilde",
                "plane translations with an infinitesimal rotation acting",
                e2tilde_algebra(), false, SolvKind::SolvableNotCompletely,
                DefKind::NotDefinable,
                "universal cover of the euclidean motion group of the plane");
  algebra_entry("sqrt2", "[x,e1] = e2, [x,e2] = 2e1; weights +-sqrt(2)",
                sqrt2_algebra(), false, SolvKind::CompletelySolvable,
                DefKind::Definable,
                "split real weights that are irrational");
  algebra_entry("sl2", "sl(2): [h,e] = 2e, [h,f] = -2f, [e,f] = h",
                sl2_algebra(), false, SolvKind::NotSolvable, std::nullopt,
                "negative control, simple algebra");

  {
    CatalogEntry e;
    e.name = "r2-rtimes-so2";
    e.description = "plane with a compact rotation torus acting";
    e.presentation =
        GroupPresentation{LieAlgebra::abelian(2), 1, {rotation2()}};
    e.expect_solvable = true;
    e.expect_nilpotent = true;  // of the simply connected part
    e.expect_solv_kind = SolvKind::CompletelySolvable;
    e.expect_def_kind = DefKind::Definable;
    e.provenance = "euclidean motion group of the plane, rotations compact";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "e2tilde-group";
    e.description = "simply connected form of the rotation-action group";
    e.presentation = GroupPresentation{e2tilde_algebra(), 0, {}};
    e.expect_solvable = true;
    e.expect_nilpotent = false;
    e.expect_solv_kind = SolvKind::SolvableNotCompletely;
    e.expect_def_kind = DefKind::NotDefinable;
    e.provenance =
        "universal cover of the euclidean motion group, torus unwound";
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_lookup(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace solvcert
