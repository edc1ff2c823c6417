#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvcert/lie_algebra.hpp"
#include "solvcert/poly.hpp"
#include "solvcert/subspace.hpp"

namespace solvcert {

enum class SolvKind { NotSolvable, SolvableNotCompletely, CompletelySolvable };

std::string to_string(SolvKind k);

/// Witness for a solvable algebra that is not completely solvable: a basis
/// element whose adjoint operator has a non-real eigenvalue.  `factor` is the
/// square-free part with all rational roots divided out; it has no real roots
/// exactly when every real eigenvalue of the operator is rational.
struct NonRealWitness {
  int basis_index;
  std::string basis_name;
  Poly characteristic;
  Poly square_free;
  Poly factor;
  int distinct_real_roots;  // of the square-free part
  int real_root_deficit;    // degree(square_free) - distinct_real_roots
};

struct SolvabilityVerdict {
  SolvKind kind;
  std::optional<Subspace> stabilized_derived;  // NotSolvable
  std::optional<NonRealWitness> witness;       // SolvableNotCompletely
  bool completely_solvable() const {
    return kind == SolvKind::CompletelySolvable;
  }
};

struct WeightReportRow {
  int basis_index;
  std::string basis_name;
  Poly characteristic;
  Poly square_free;
  int distinct_real_roots;
  bool real_rooted;
};

/// Per-basis-element eigenvalue analysis of the adjoint operators.
struct WeightReport {
  std::vector<WeightReportRow> rows;
  bool all_real_rooted;
};

WeightReport weight_report(const LieAlgebra& g);

/// Decides complete solvability.  The real-rootedness test runs on the basis
/// elements only; this suffices because the eigenvalues of every ad(xi) are
/// the values of finitely many linear weight functionals, which are real as
/// soon as they are real on a basis.  The randomized check below guards that
/// reduction independently.
SolvabilityVerdict is_completely_solvable(const LieAlgebra& g);

struct SampledCheck {
  bool all_real_rooted;
  int samples;
  std::uint64_t seed;
  std::optional<RatVec> witness;       // first failing sample
  std::optional<Poly> witness_char_poly;
};

/// Draws random rational elements (coordinates in {-10..10}/7, seeded) and
/// tests real-rootedness of each ad char polynomial.  Input must be solvable.
SampledCheck sampled_eigenvalue_check(const LieAlgebra& g, int samples,
                                      std::uint64_t seed);

enum class FlagMode { Exact, Numeric };

/// Complete flag of ideals 0 = F_0 < F_1 < ... < F_n = g, dim F_i = i.
/// Exact flags store echelon subspaces and satisfy [g, F_i] <= F_i exactly.
/// Numeric flags store orthonormal row bases and carry the certified maximal
/// ideal residual.
struct Flag {
  FlagMode mode = FlagMode::Exact;
  std::vector<Subspace> exact;
  std::vector<Eigen::MatrixXd> numeric;
  double tolerance = 0.0;
  double max_residual = 0.0;
  int length() const {
    return static_cast<int>(mode == FlagMode::Exact ? exact.size()
                                                    : numeric.size());
  }
};

/// Builds a complete flag by repeatedly extracting a one-dimensional ideal
/// and passing to the quotient.  Exact mode requires every eigenvalue that
/// the construction meets to be rational and throws NeedsIrrationalEigenvalue
/// otherwise.  Numeric mode runs the same chain, staying exact as long as
/// possible and switching to floating point at the first irrational level;
/// every subspace is certified against the stated tolerance.
/// Throws NotCompletelySolvable unless is_completely_solvable agrees.
Flag complete_flag(const LieAlgebra& g, FlagMode mode, double tol = 1e-8);

/// The exact flag search without the completely-solvable gate: either a full
/// exact flag, or the characteristic factor of the level where no rational
/// eigenvalue exists.  Input must be solvable.
struct FlagSearchOutcome {
  std::optional<Flag> flag;
  std::optional<Poly> blocking_factor;
};
FlagSearchOutcome exact_flag_search(const LieAlgebra& g);

/// Exact check of the Flag invariants (dims 0..n, ideal property).
bool verify_exact_flag(const LieAlgebra& g, const Flag& flag);

/// Max over flag members of the ideal residual ||[e_i, b] - proj(...)||_inf.
double numeric_flag_residual(const LieAlgebra& g,
                             const std::vector<Eigen::MatrixXd>& members);

/// Radical of the Killing form; equals the nilradical under the completely
/// solvable precondition (real weights make K(x,x) a sum of squares).
/// Throws NotCompletelySolvable on other inputs.
Subspace nilradical_completely_solvable(const LieAlgebra& g);

}  // namespace solvcert
