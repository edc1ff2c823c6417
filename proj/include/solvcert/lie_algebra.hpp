#pragma once

#include <string>
#include <vector>

#include "solvcert/rat_matrix.hpp"
#include "solvcert/rational.hpp"
#include "solvcert/subspace.hpp"

namespace solvcert {

/// Finite-dimensional Lie algebra over the rationals, given by structure
/// constants on a fixed basis.  Constants are stored for i < j only, so
/// antisymmetry holds by construction; the Jacobi identity is verified
/// exactly on every basis triple at construction time.
class LieAlgebra {
 public:
  /// `constants[p]` is the bracket [x_i, x_j] for the p-th pair (i, j),
  /// pairs enumerated with i < j in lexicographic order.
  LieAlgebra(int dim, std::vector<std::string> basis_names,
             std::vector<RatVec> constants);

  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& basis_name(int i) const { return names_[i]; }

  /// [x_i, x_j] for basis indices; antisymmetric in (i, j).
  RatVec bracket_basis(int i, int j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  RatVec bracket(const RatVec& a, const RatVec& b) const;

  /// Matrix of b |-> [xi, b] in the algebra basis.
  RatMatrix ad_matrix(const RatVec& xi) const;
  RatMatrix ad_basis(int i) const;

  /// Span of [a, b] over all basis pairs of the two subspaces.
  Subspace bracket_space(const Subspace& a, const Subspace& b) const;

  Subspace full_space() const { return Subspace::full(dim_); }
  RatVec basis_element(int i) const;

  /// g >= [g,g] >= [[g,g],[g,g]] >= ..., truncated at the first repeat.
  std::vector<Subspace> derived_series() const;
  /// g >= [g,g] >= [g,[g,g]] >= ..., truncated at the first repeat.
  std::vector<Subspace> lower_central_series() const;
  bool is_solvable() const;
  bool is_nilpotent() const;
  /// Number of nonzero terms of the lower central series; 0 for dim 0.
  int nilpotency_class() const;

  Subspace center() const;
  Subspace centralizer(const Subspace& s) const;

  bool is_ideal(const Subspace& s) const;

  /// Killing form matrix K(x_i, x_j) = trace(ad x_i * ad x_j).
  RatMatrix killing_form() const;

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<RatVec> c_;  // one entry per pair i < j

  int pair_index(int i, int j) const;  // requires i < j
  void verify_jacobi() const;
};

/// Quotient by an ideal: the algebra on a canonical complement basis (the
/// non-pivot coordinates of the ideal), with the projection and its
/// right-inverse lift.  Throws NotAnIdeal when the pre-check fails.
struct QuotientResult {
  LieAlgebra algebra;
  RatMatrix projection;  // (n-k) x n
  RatMatrix lift;        // n x (n-k), projection * lift = identity
};
QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal);

/// Extension of h by commuting derivations: dimension grows by the number
/// of derivations, each new generator t_j acts by [t_j, a] = D_j a, and
/// [t_j, t_k] = 0.  Validates the Leibniz rule and pairwise commutation.
LieAlgebra semidirect_sum(const LieAlgebra& h,
                          const std::vector<RatMatrix>& derivations,
                          const std::vector<std::string>& new_names = {});

/// The Lie algebra structure induced on a bracket-closed subspace, in the
/// subspace's echelon basis.  Throws InvalidInput when not closed.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s);

/// Structure constants conjugated by an invertible matrix whose columns are
/// the new basis vectors.
LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& new_basis);

/// True when d satisfies the Leibniz rule on every basis pair of g.
bool is_derivation(const LieAlgebra& g, const RatMatrix& d);

/// Echelon basis of the space of derivations of g, as matrices.
std::vector<RatMatrix> derivation_space(const LieAlgebra& g);

}  // namespace solvcert
