#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvcert/errors.hpp"
#include "solvcert/lie_algebra.hpp"
#include "solvcert/rng.hpp"

using namespace solvcert;

namespace {

RatVec vec3(long a, long b, long c) { return RatVec{Rat(a), Rat(b), Rat(c)}; }

LieAlgebra heisenberg() {
  // [x, y] = z
  return LieAlgebra(3, {"x", "y", "z"},
                    {vec3(0, 0, 1), vec3(0, 0, 0), vec3(0, 0, 0)});
}

LieAlgebra affine_line() {
  // [x, y] = y
  return LieAlgebra(2, {"x", "y"}, {RatVec{Rat(0), Rat(1)}});
}

LieAlgebra sl2() {
  // [h, e] = 2e, [h, f] = -2f, [e, f] = h
  return LieAlgebra(3, {"h", "e", "f"},
                    {vec3(0, 2, 0), vec3(0, 0, -2), vec3(1, 0, 0)});
}

RatMatrix rotation2() {
  RatMatrix d(2, 2);
  d.at(0, 1) = Rat(1);
  d.at(1, 0) = Rat(-1);
  return d;
}

LieAlgebra e2tilde() {
  return semidirect_sum(LieAlgebra::abelian(2), {rotation2()}, {"X"});
}

}  // namespace

TEST_CASE("constructor validates the Jacobi identity") {
  CHECK_NOTHROW(heisenberg());
  CHECK_NOTHROW(affine_line());
  // [x,y] = z, [x,z] = x: cyclic sum at (x,y,z) is z, not zero
  CHECK_THROWS_AS(LieAlgebra(3, {"x", "y", "z"},
                             {vec3(0, 0, 1), vec3(1, 0, 0), vec3(0, 0, 0)}),
                  JacobiViolation);
  CHECK_THROWS_AS(LieAlgebra(3, {"x", "y"}, {}), DimensionError);
  CHECK_THROWS_AS(LieAlgebra(2, {"x", "y"}, {vec3(0, 0, 0)}), DimensionError);
  CHECK_THROWS_AS(LieAlgebra(2, {"x", "x"}, {RatVec{Rat(0), Rat(0)}}),
                  DimensionError);
}

TEST_CASE("bracket is the antisymmetric bilinear extension") {
  LieAlgebra h = heisenberg();
  CHECK(h.bracket(h.basis_element(0), h.basis_element(1)) == vec3(0, 0, 1));
  CHECK(h.bracket_basis(1, 0) == vec3(0, 0, -1));

  Rng rng(5);
  for (int it = 0; it < 20; ++it) {
    RatVec a{rng.rational(), rng.rational(), rng.rational()};
    CHECK(is_zero(h.bracket(a, a)));
  }

  LieAlgebra aff = affine_line();
  RatVec xy{Rat(1), Rat(1)};
  CHECK(aff.bracket(xy, RatVec{Rat(0), Rat(1)}) == RatVec{Rat(0), Rat(1)});
}

TEST_CASE("ad matrices") {
  LieAlgebra h = heisenberg();
  RatMatrix adx = h.ad_basis(0);
  RatMatrix expect(3, 3);
  expect.at(2, 1) = Rat(1);  // y |-> z
  CHECK(adx == expect);
  CHECK(h.ad_matrix(vec3(0, 0, 0)).is_zero());

  LieAlgebra e2 = e2tilde();
  RatMatrix adX = e2.ad_basis(2);
  RatMatrix block(3, 3);
  block.at(0, 1) = Rat(1);
  block.at(1, 0) = Rat(-1);
  CHECK(adX == block);
}

TEST_CASE("ad is a Lie homomorphism") {
  Rng rng(7);
  for (const LieAlgebra& g : {heisenberg(), affine_line(), sl2(), e2tilde()}) {
    for (int it = 0; it < 15; ++it) {
      RatVec a(g.dim()), b(g.dim());
      for (int i = 0; i < g.dim(); ++i) {
        a[i] = rng.rational();
        b[i] = rng.rational();
      }
      RatMatrix lhs = g.ad_matrix(g.bracket(a, b));
      RatMatrix rhs = g.ad_matrix(a) * g.ad_matrix(b) - g.ad_matrix(b) * g.ad_matrix(a);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("bracket_space") {
  LieAlgebra h = heisenberg();
  Subspace dg = h.bracket_space(h.full_space(), h.full_space());
  CHECK(dg == Subspace::span(3, {vec3(0, 0, 1)}));
  CHECK(h.bracket_space(h.full_space(), Subspace::zero(3)).dim() == 0);
  LieAlgebra ab = LieAlgebra::abelian(3);
  CHECK(ab.bracket_space(ab.full_space(), ab.full_space()).dim() == 0);
}

TEST_CASE("derived and lower central series") {
  LieAlgebra h = heisenberg();
  auto ds = h.derived_series();
  REQUIRE(ds.size() == 3);
  CHECK(ds[0].dim() == 3);
  CHECK(ds[1] == Subspace::span(3, {vec3(0, 0, 1)}));
  CHECK(ds[2].dim() == 0);

  auto ds_ab = LieAlgebra::abelian(2).derived_series();
  REQUIRE(ds_ab.size() == 2);
  CHECK(ds_ab[1].dim() == 0);

  auto ds_sl2 = sl2().derived_series();
  REQUIRE(ds_sl2.size() == 2);
  CHECK(ds_sl2[0].dim() == 3);
  CHECK(ds_sl2[1].dim() == 3);

  // strict decrease until the fixed point
  for (const LieAlgebra& g : {heisenberg(), affine_line(), sl2(), e2tilde()}) {
    for (auto series : {g.derived_series(), g.lower_central_series()}) {
      for (size_t i = 0; i + 2 < series.size(); ++i)
        CHECK(series[i].dim() > series[i + 1].dim());
    }
  }
}

TEST_CASE("solvable and nilpotent flags") {
  CHECK(heisenberg().is_solvable());
  CHECK(heisenberg().is_nilpotent());
  CHECK(heisenberg().nilpotency_class() == 2);
  CHECK(affine_line().is_solvable());
  CHECK_FALSE(affine_line().is_nilpotent());
  CHECK_FALSE(sl2().is_solvable());
  CHECK(e2tilde().is_solvable());
  CHECK_FALSE(e2tilde().is_nilpotent());
}

TEST_CASE("center and centralizer") {
  CHECK(heisenberg().center() == Subspace::span(3, {vec3(0, 0, 1)}));
  LieAlgebra ab = LieAlgebra::abelian(3);
  CHECK(ab.center() == ab.full_space());
  CHECK(affine_line().center().dim() == 0);

  LieAlgebra h = heisenberg();
  Subspace z = Subspace::span(3, {vec3(0, 0, 1)});
  CHECK(h.centralizer(z) == h.full_space());
  CHECK(h.centralizer(Subspace::zero(3)) == h.full_space());
}

TEST_CASE("quotient") {
  LieAlgebra h = heisenberg();
  Subspace z = Subspace::span(3, {vec3(0, 0, 1)});
  QuotientResult q = quotient(h, z);
  CHECK(q.algebra.dim() == 2);
  CHECK(is_zero(q.algebra.bracket_basis(0, 1)));  // abelian quotient
  CHECK(q.projection * q.lift == RatMatrix::identity(2));

  QuotientResult whole = quotient(h, Subspace::zero(3));
  CHECK(whole.algebra.dim() == 3);
  CHECK(whole.algebra.bracket_basis(0, 1) == vec3(0, 0, 1));

  CHECK_THROWS_AS(quotient(h, Subspace::span(3, {vec3(0, 1, 0)})), NotAnIdeal);
}

TEST_CASE("quotient projection preserves brackets") {
  Rng rng(13);
  LieAlgebra h = heisenberg();
  Subspace z = Subspace::span(3, {vec3(0, 0, 1)});
  QuotientResult q = quotient(h, z);
  for (int it = 0; it < 25; ++it) {
    RatVec a{rng.rational(), rng.rational(), rng.rational()};
    RatVec b{rng.rational(), rng.rational(), rng.rational()};
    CHECK(q.projection.apply(h.bracket(a, b)) ==
          q.algebra.bracket(q.projection.apply(a), q.projection.apply(b)));
  }
}

TEST_CASE("semidirect sums") {
  LieAlgebra e2 = e2tilde();
  CHECK(e2.dim() == 3);
  CHECK(e2.bracket_basis(2, 0) == vec3(0, -1, 0));  // [X, E1] = -E2
  CHECK(e2.bracket_basis(2, 1) == vec3(1, 0, 0));   // [X, E2] = E1

  RatMatrix one(1, 1);
  one.at(0, 0) = Rat(1);
  LieAlgebra aff = semidirect_sum(LieAlgebra::abelian(1), {one});
  CHECK(aff.dim() == 2);
  CHECK(aff.bracket_basis(1, 0) == RatVec{Rat(1), Rat(0)});  // [t, y] = y

  CHECK_THROWS_AS(semidirect_sum(heisenberg(), {RatMatrix::identity(3)}),
                  NotADerivation);

  RatMatrix d1(2, 2), d2(2, 2);
  d1.at(0, 0) = Rat(1);
  d2.at(0, 1) = Rat(1);
  CHECK_THROWS_AS(semidirect_sum(LieAlgebra::abelian(2), {d1, d2}),
                  NonCommutingDerivations);
}

TEST_CASE("derivation space") {
  for (const LieAlgebra& g : {heisenberg(), affine_line(), sl2()}) {
    auto ders = derivation_space(g);
    CHECK(!ders.empty());
    for (const RatMatrix& d : ders) CHECK(is_derivation(g, d));
    // ad(x) is always a derivation, so it must lie in the computed space
    for (int i = 0; i < g.dim(); ++i) CHECK(is_derivation(g, g.ad_basis(i)));
  }
  CHECK(derivation_space(LieAlgebra::abelian(2)).size() == 4);
}

TEST_CASE("change of basis preserves bracket structure") {
  Rng rng(17);
  for (const LieAlgebra& g : {heisenberg(), affine_line(), sl2(), e2tilde()}) {
    for (int it = 0; it < 5; ++it) {
      RatMatrix t(g.dim(), g.dim());
      do {
        for (int i = 0; i < g.dim(); ++i)
          for (int j = 0; j < g.dim(); ++j) t.at(i, j) = Rat(rng.uniform(-3, 3));
      } while (rank(t) != g.dim());
      LieAlgebra conj = change_basis(g, t);
      for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
          RatVec lhs = t.apply(conj.bracket_basis(i, j));
          RatVec rhs = g.bracket(t.col(i), t.col(j));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("killing form of the heisenberg algebra vanishes") {
  CHECK(heisenberg().killing_form().is_zero());
  RatMatrix k = affine_line().killing_form();
  CHECK(k.at(0, 0) == Rat(1));
  CHECK(k.at(0, 1) == Rat(0));
  CHECK(k.at(1, 1) == Rat(0));
}

TEST_CASE("subalgebra extraction") {
  LieAlgebra h = heisenberg();
  Subspace s = Subspace::span(3, {vec3(1, 0, 0), vec3(0, 0, 1)});
  LieAlgebra sub = subalgebra(h, s);
  CHECK(sub.dim() == 2);
  CHECK(is_zero(sub.bracket_basis(0, 1)));
  CHECK_THROWS_AS(
      subalgebra(h, Subspace::span(3, {vec3(1, 0, 0), vec3(0, 1, 0)})),
      InvalidInput);
}
