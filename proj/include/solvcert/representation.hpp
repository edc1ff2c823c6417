#pragma once

#include <string>
#include <vector>

#include "solvcert/lie_algebra.hpp"
#include "solvcert/rat_matrix.hpp"
#include "solvcert/solvability.hpp"

namespace solvcert {

enum class RepTier {
  AdCenterless,
  AdPlusCharacters,
  NilpotentPBW,
  SplitOverNilradical,
};

std::string to_string(RepTier t);

/// Matrix representation of a Lie algebra: one target matrix per basis
/// vector, with the homomorphism law rho([x,y]) = rho(x)rho(y) - rho(y)rho(x)
/// holding exactly.  The triangularity and faithfulness flags are computed,
/// never assumed.
struct Representation {
  int target_dim = 0;
  RepTier tier = RepTier::AdCenterless;
  std::vector<RatMatrix> matrices;
  bool is_triangular = false;
  bool is_faithful = false;
};

/// Exact check of the homomorphism law on all basis pairs.
bool verify_homomorphism(const LieAlgebra& g, const Representation& rep);

/// Joint kernel {a : sum a_i rho(x_i) = 0}; empty iff faithful.
std::vector<RatVec> representation_joint_kernel(const Representation& rep);

/// The adjoint representation in a basis adapted to an exact complete flag;
/// upper triangular by construction, faithful iff the center is zero.
Representation triangularize_ad(const LieAlgebra& g, const Flag& flag);

/// Faithful triangular representation of a completely solvable algebra,
/// dispatching over four constructive tiers:
///   (a) zero center: the triangularized adjoint representation;
///   (b) center meeting the derived algebra trivially: adjoint block plus a
///       diagonal character block separating the center;
///   (c) nilpotent: left multiplication on the enveloping algebra truncated
///       past the nilpotency class, on a weight-graded monomial basis;
///   (d) an abelian complement to the nilradical acting by derivations on
///       the truncated enveloping algebra of the nilradical.
/// Inputs outside all four tiers raise UnsupportedAdoCase; levels whose
/// eigenvalues are irrational raise NeedsIrrationalEigenvalue; target
/// dimensions beyond size_bound raise SizeError.
Representation faithful_triangular_rep(const LieAlgebra& g,
                                       int size_bound = 5000);

}  // namespace solvcert
