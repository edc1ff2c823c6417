#include "solvcert/random_algebras.hpp"

#include "solvcert/errors.hpp"
#include "solvcert/poly.hpp"

namespace solvcert {

RatMatrix random_invertible(int n, Rng& rng, long box) {
  RatMatrix t(n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(i, j) = Rat(rng.uniform(-box, box));
  } while (rank(t) != n);
  return t;
}

LieAlgebra random_basis_change(const LieAlgebra& g, Rng& rng) {
  return change_basis(g, random_invertible(g.dim(), rng));
}

namespace {

bool is_rational_square(const Rat& q) {
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.num().get_mpz_t()) &&
         mpz_perfect_square_p(q.den().get_mpz_t());
}

LieAlgebra heisenberg3() {
  RatVec z{Rat(0), Rat(0), Rat(1)};
  RatVec zero(3, Rat(0));
  return LieAlgebra(3, {"x", "y", "z"}, {z, zero, zero});
}

}  // namespace

bool splits_over_gaussian_rationals(const Poly& p) {
  Poly f = strip_rational_roots(p);
  if (f.degree() <= 0) return true;
  if (f.degree() != 2) return false;  // odd => real irrational root; >=4 unhandled
  Rat b = f.coeff(1), c = f.coeff(0);
  Rat disc = b * b - Rat(4) * c;
  return disc.sign() < 0 && is_rational_square(-disc);
}

LieAlgebra random_solvable(Rng& rng, int max_dim) {
  bool heis_core = max_dim >= 3 && rng.uniform(0, 2) == 2;
  LieAlgebra core = heis_core
                        ? heisenberg3()
                        : LieAlgebra::abelian(static_cast<int>(
                              rng.uniform(1, std::min(3L, (long)max_dim))));
  int m = static_cast<int>(rng.uniform(0, std::min(2L, (long)(max_dim - core.dim()))));
  if (m == 0) return core;

  std::vector<RatMatrix> ders;
  if (heis_core) {
    // Derivations of the Heisenberg algebra: the diagonal family
    // x -> a x, y -> b y, z -> (a+b) z and the rotation of the (x, y) plane.
    auto diag_der = [](const Rat& a, const Rat& b) {
      RatMatrix d(3, 3);
      d.at(0, 0) = a;
      d.at(1, 1) = b;
      d.at(2, 2) = a + b;
      return d;
    };
    if (m == 1) {
      RatMatrix rot(3, 3);
      rot.at(0, 1) = Rat(1);
      rot.at(1, 0) = Rat(-1);
      for (int tries = 0; tries < 40; ++tries) {
        Rat a(rng.uniform(-2, 2)), b(rng.uniform(-2, 2)), c(rng.uniform(-1, 1));
        RatMatrix d = diag_der(a, b) + rot * c;
        if (splits_over_gaussian_rationals(char_poly(d))) {
          ders.push_back(d);
          break;
        }
      }
      if (ders.empty()) ders.push_back(diag_der(Rat(1), Rat(0)));
    } else {
      for (int j = 0; j < m; ++j)
        ders.push_back(diag_der(Rat(rng.uniform(-2, 2)), Rat(rng.uniform(-2, 2))));
    }
  } else {
    // Commuting derivations of the abelian core: conjugates of matrices that
    // are block diagonal w.r.t. a shared partition; 2x2 blocks a*I + b*rot
    // have eigenvalues a +- b*i, 1x1 blocks are rational scalars.
    int k = core.dim();
    std::vector<int> block_sizes;
    int pos = 0;
    while (pos < k) {
      if (k - pos >= 2 && rng.uniform(0, 1) == 1) {
        block_sizes.push_back(2);
        pos += 2;
      } else {
        block_sizes.push_back(1);
        pos += 1;
      }
    }
    RatMatrix t = random_invertible(k, rng);
    RatMatrix tinv = inverse(t);
    for (int j = 0; j < m; ++j) {
      RatMatrix b(k, k);
      int at = 0;
      for (int size : block_sizes) {
        if (size == 1) {
          b.at(at, at) = Rat(rng.uniform(-2, 2));
        } else {
          Rat a(rng.uniform(-2, 2));
          Rat rb = rng.uniform(0, 1) == 1 ? Rat(rng.uniform(1, 2)) : Rat(0);
          b.at(at, at) = a;
          b.at(at + 1, at + 1) = a;
          b.at(at, at + 1) = rb;
          b.at(at + 1, at) = -rb;
        }
        at += size;
      }
      ders.push_back(t * b * tinv);
    }
  }
  return semidirect_sum(core, ders);
}

}  // namespace solvcert
