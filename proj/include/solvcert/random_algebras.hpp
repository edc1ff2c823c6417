#pragma once

#include "solvcert/lie_algebra.hpp"
#include "solvcert/rng.hpp"

namespace solvcert {

/// Random invertible matrix with small integer entries.
RatMatrix random_invertible(int n, Rng& rng, long box = 2);

/// The same algebra expressed in a random basis (structure constants
/// conjugated by a random invertible matrix).
LieAlgebra random_basis_change(const LieAlgebra& g, Rng& rng);

/// Random solvable algebra of dimension <= max_dim, built as a semidirect
/// sum of a nilpotent core (abelian or Heisenberg) with commuting
/// derivations whose eigenvalues lie in Q or i*Q.  This keeps every weight
/// of the result in Q(i), so the exact flag search can only fail at a level
/// with no real eigenvalue at all.  Mixes completely solvable and
/// not-completely-solvable outputs.
LieAlgebra random_solvable(Rng& rng, int max_dim = 5);

/// True when every root of p lies in Q(i): rational roots are divided out
/// and the remainder must split into quadratics l^2 + p l + r whose
/// discriminant is minus a rational square.
bool splits_over_gaussian_rationals(const Poly& p);

}  // namespace solvcert
