#pragma once

#include <string>
#include <vector>

#include "solvcert/lie_algebra.hpp"
#include "solvcert/rat_matrix.hpp"
#include "solvcert/solvability.hpp"

namespace solvcert {

/// Connected solvable Lie group presented in split form: a torus of rank m
/// acting on a simply connected group F through commuting infinitesimal
/// generators D_1..D_m.  Compactness of the torus factor is encoded
/// infinitesimally: each D_j must be a semisimple derivation of f with
/// purely imaginary spectrum, so the closure of exp(t D_j) is a torus.
struct GroupPresentation {
  LieAlgebra f;
  int torus_rank = 0;
  std::vector<RatMatrix> derivations;
};

struct ValidationCertificate {
  std::string rule;  // derivation | commutation | semisimple | imaginary-spectrum
  int derivation_index;  // -1 when the rule spans several
  std::string detail;
};

/// Exact validation of the presentation; returns one certificate per passed
/// check and throws InvalidPresentation on the first failure.
std::vector<ValidationCertificate> validate_presentation(
    const GroupPresentation& p);

enum class DefKind { Definable, NotDefinable, InvalidPresentation };

std::string to_string(DefKind k);

/// Definability verdict with re-verifiable reasons: the embedded solvability
/// verdict and, for group presentations, the torus validation certificates.
struct DefinabilityVerdict {
  DefKind kind = DefKind::InvalidPresentation;
  SolvabilityVerdict solvability;
  std::vector<ValidationCertificate> torus_certificates;
};

/// Verdict for the simply connected group with Lie algebra g: definable in
/// an o-minimal expansion of the real field iff g is completely solvable.
/// Throws InvalidPresentation when g is not solvable (outside scope).
DefinabilityVerdict classify_simply_connected(const LieAlgebra& g);

/// Verdict for a split presentation: after validation, the group is
/// definable iff the simply connected part is completely solvable (the
/// compact factor contributes the validated torus data).
DefinabilityVerdict classify_group(const GroupPresentation& p);

}  // namespace solvcert
