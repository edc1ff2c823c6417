#pragma once

#include "solvcert/rat_matrix.hpp"

namespace solvcert {

/// Additive Jordan-Chevalley decomposition m = semisimple + nilpotent with
/// the two parts commuting.  Both parts are polynomials in m, so the
/// decomposition is rational even when the eigenvalues are not.
struct JCDecomposition {
  RatMatrix semisimple;
  RatMatrix nilpotent;
};

/// Computes the decomposition by Newton iteration against the square-free
/// part f of the characteristic polynomial: s <- s - f(s) * f'(s)^{-1},
/// starting at m.  f(m) is nilpotent, so the iteration reaches f(s) = 0 in
/// at most ceil(log2(n)) + 1 steps.
JCDecomposition jordan_chevalley(const RatMatrix& m);

}  // namespace solvcert
