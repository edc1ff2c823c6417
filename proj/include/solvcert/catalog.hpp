#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvcert/lie_algebra.hpp"
#include "solvcert/presentation.hpp"
#include "solvcert/solvability.hpp"

namespace solvcert {

/// Built-in example with its expected verdicts; the test suite re-derives
/// every expectation through the classifiers.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::optional<LieAlgebra> algebra;
  std::optional<GroupPresentation> presentation;
  bool expect_solvable = false;
  bool expect_nilpotent = false;
  std::optional<SolvKind> expect_solv_kind;
  std::optional<DefKind> expect_def_kind;
  std::string provenance;

  const LieAlgebra& underlying_algebra() const {
    return algebra ? *algebra : presentation->f;
  }
};

const std::vector<CatalogEntry>& catalog();

/// nullptr when the name is unknown.
const CatalogEntry* catalog_lookup(const std::string& name);

}  // namespace solvcert
