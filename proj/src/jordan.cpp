#include "solvcert/jordan.hpp"

#include "solvcert/errors.hpp"
#include "solvcert/poly.hpp"

namespace solvcert {

JCDecomposition jordan_chevalley(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("jordan_chevalley of non-square matrix");
  int n = m.rows();
  if (n == 0) return {m, m};
  Poly f = square_free_part(char_poly(m));
  Poly fp = f.derivative();
  RatMatrix s = m;
  int bound = 1;
  while ((1 << bound) < n + 1) ++bound;
  for (int it = 0; it <= bound + 1; ++it) {
    RatMatrix fs = eval_poly(f, s);
    if (fs.is_zero()) return {s, m - s};
    // f'(s) is invertible: its eigenvalues are f'(lambda) with lambda a
    // root of the square-free f, and those values are nonzero.
    s = s - fs * inverse(eval_poly(fp, s));
  }
  throw Error("jordan_chevalley: Newton iteration failed to converge");
}

}  // namespace solvcert
