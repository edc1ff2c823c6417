#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvcert/errors.hpp"
#include "solvcert/random_algebras.hpp"
#include "solvcert/rng.hpp"
#include "solvcert/solvability.hpp"

using namespace solvcert;

namespace {

RatVec vec3(long a, long b, long c) { return RatVec{Rat(a), Rat(b), Rat(c)}; }

LieAlgebra heisenberg() {
  return LieAlgebra(3, {"x", "y", "z"},
                    {vec3(0, 0, 1), vec3(0, 0, 0), vec3(0, 0, 0)});
}

LieAlgebra affine_line() {
  return LieAlgebra(2, {"x", "y"}, {RatVec{Rat(0), Rat(1)}});
}

LieAlgebra sl2() {
  return LieAlgebra(3, {"h", "e", "f"},
                    {vec3(0, 2, 0), vec3(0, 0, -2), vec3(1, 0, 0)});
}

LieAlgebra e2tilde() {
  RatMatrix rot(2, 2);
  rot.at(0, 1) = Rat(1);
  rot.at(1, 0) = Rat(-1);
  return semidirect_sum(LieAlgebra::abelian(2), {rot}, {"X"});
}

// Upper triangular 2x2 matrices: basis E11, E22, E12.
LieAlgebra t2() {
  return LieAlgebra(3, {"E11", "E22", "E12"},
                    {vec3(0, 0, 0), vec3(0, 0, 1), vec3(0, 0, -1)});
}

// [x, e1] = e2, [x, e2] = 2 e1: ad(x) has eigenvalues +-sqrt(2).
LieAlgebra sqrt2_algebra() {
  return LieAlgebra(3, {"x", "e1", "e2"},
                    {vec3(0, 0, 1), vec3(0, 2, 0), vec3(0, 0, 0)});
}

Poly poly(std::initializer_list<long> lowest_first) {
  RatVec c;
  for (long x : lowest_first) c.push_back(Rat(x));
  return Poly(c);
}

}  // namespace

TEST_CASE("complete solvability verdicts") {
  CHECK(is_completely_solvable(t2()).kind == SolvKind::CompletelySolvable);
  CHECK(is_completely_solvable(heisenberg()).kind ==
        SolvKind::CompletelySolvable);
  CHECK(is_completely_solvable(sqrt2_algebra()).kind ==
        SolvKind::CompletelySolvable);

  SolvabilityVerdict e2 = is_completely_solvable(e2tilde());
  CHECK(e2.kind == SolvKind::SolvableNotCompletely);
  REQUIRE(e2.witness.has_value());
  CHECK(e2.witness->basis_name == "X");
  CHECK(e2.witness->factor == poly({1, 0, 1}));  // T^2 + 1
  CHECK(e2.witness->real_root_deficit > 0);
  CHECK(real_root_count(e2.witness->square_free) <
        e2.witness->square_free.degree());

  SolvabilityVerdict s = is_completely_solvable(sl2());
  CHECK(s.kind == SolvKind::NotSolvable);
  REQUIRE(s.stabilized_derived.has_value());
  CHECK(s.stabilized_derived->dim() == 3);
}

TEST_CASE("weight report") {
  WeightReport r = weight_report(e2tilde());
  REQUIRE(r.rows.size() == 3);
  CHECK_FALSE(r.all_real_rooted);
  CHECK(r.rows[0].real_rooted);   // ad(E1) nilpotent
  CHECK(r.rows[1].real_rooted);   // ad(E2) nilpotent
  CHECK_FALSE(r.rows[2].real_rooted);
  CHECK(r.rows[2].characteristic == poly({0, 1, 0, 1}));  // T(T^2+1)
  for (const auto& row : r.rows)
    CHECK(row.real_rooted ==
          (row.distinct_real_roots == row.square_free.degree()));
}

TEST_CASE("sampled eigenvalue check") {
  SampledCheck ok = sampled_eigenvalue_check(heisenberg(), 200, 42);
  CHECK(ok.all_real_rooted);

  SampledCheck bad = sampled_eigenvalue_check(e2tilde(), 200, 42);
  CHECK_FALSE(bad.all_real_rooted);
  REQUIRE(bad.witness.has_value());
  REQUIRE(bad.witness_char_poly.has_value());
  CHECK_FALSE(is_real_rooted(*bad.witness_char_poly));
  // the witness sample has a nonzero coordinate on the rotation generator
  CHECK_FALSE((*bad.witness)[2].is_zero());

  CHECK(sampled_eigenvalue_check(LieAlgebra::abelian(3), 50, 7).all_real_rooted);
  CHECK_THROWS_AS(sampled_eigenvalue_check(sl2(), 10, 1), InvalidInput);
}

TEST_CASE("exact complete flags") {
  LieAlgebra h = heisenberg();
  Flag f = complete_flag(h, FlagMode::Exact);
  CHECK(verify_exact_flag(h, f));
  CHECK(f.exact[1] == Subspace::span(3, {vec3(0, 0, 1)}));  // center first

  LieAlgebra ab = LieAlgebra::abelian(2);
  Flag fab = complete_flag(ab, FlagMode::Exact);
  CHECK(verify_exact_flag(ab, fab));
  CHECK(fab.exact[1] == Subspace::span(2, {RatVec{Rat(1), Rat(0)}}));

  Flag ft2 = complete_flag(t2(), FlagMode::Exact);
  CHECK(verify_exact_flag(t2(), ft2));

  Flag faff = complete_flag(affine_line(), FlagMode::Exact);
  CHECK(verify_exact_flag(affine_line(), faff));
  CHECK(faff.exact[1] == Subspace::span(2, {RatVec{Rat(0), Rat(1)}}));

  CHECK_THROWS_AS(complete_flag(e2tilde(), FlagMode::Exact),
                  NotCompletelySolvable);
}

TEST_CASE("irrational eigenvalues route to numeric mode") {
  LieAlgebra g = sqrt2_algebra();
  try {
    complete_flag(g, FlagMode::Exact);
    FAIL("expected NeedsIrrationalEigenvalue");
  } catch (const NeedsIrrationalEigenvalue& e) {
    REQUIRE(e.poly_coeffs.size() == 3);  // T^2 - 2
    CHECK(e.poly_coeffs[0] == "-2");
    CHECK(e.poly_coeffs[1] == "0");
    CHECK(e.poly_coeffs[2] == "1");
  }

  Flag nf = complete_flag(g, FlagMode::Numeric, 1e-9);
  CHECK(nf.mode == FlagMode::Numeric);
  CHECK(nf.numeric.size() == 4);
  CHECK(nf.max_residual <= 1e-9);
  // the one-dimensional member is the sqrt(2) eigenline inside span(e1, e2)
  CHECK(std::abs(nf.numeric[1](0, 0)) < 1e-9);
}

TEST_CASE("numeric flag of a rational algebra reuses the exact chain") {
  LieAlgebra h = heisenberg();
  Flag nf = complete_flag(h, FlagMode::Numeric, 1e-8);
  CHECK(nf.numeric.size() == 4);
  CHECK(nf.max_residual <= 1e-14);
}

TEST_CASE("numeric flag survives nilpotent levels after the switch") {
  // sqrt2 block plus a Heisenberg block: the first level needs an irrational
  // eigenvalue, after which the remaining levels (including exactly-repeated
  // zero eigenvalues) run in floating point.
  RatVec zero(6, Rat(0));
  auto unit = [&](int k) {
    RatVec v(6, Rat(0));
    v[k] = Rat(1);
    return v;
  };
  // basis: x, e1, e2 (sqrt2 part), hx, hy, hz (Heisenberg part)
  std::vector<RatVec> c;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      if (i == 0 && j == 1) c.push_back(unit(2));                 // [x,e1]=e2
      else if (i == 0 && j == 2) c.push_back(Rat(2) * unit(1));   // [x,e2]=2e1
      else if (i == 3 && j == 4) c.push_back(unit(5));            // [hx,hy]=hz
      else c.push_back(zero);
    }
  LieAlgebra g(6, {"x", "e1", "e2", "hx", "hy", "hz"}, c);
  REQUIRE(is_completely_solvable(g).completely_solvable());
  CHECK_THROWS_AS(complete_flag(g, FlagMode::Exact), NeedsIrrationalEigenvalue);
  Flag nf = complete_flag(g, FlagMode::Numeric, 1e-8);
  CHECK(nf.numeric.size() == 7);
  CHECK(nf.max_residual <= 1e-8);
}

TEST_CASE("nilradical via the Killing radical") {
  CHECK(nilradical_completely_solvable(heisenberg()) == Subspace::full(3));
  CHECK(nilradical_completely_solvable(affine_line()) ==
        Subspace::span(2, {RatVec{Rat(0), Rat(1)}}));
  CHECK(nilradical_completely_solvable(t2()) ==
        Subspace::span(3, {vec3(1, 1, 0), vec3(0, 0, 1)}));
  CHECK_THROWS_AS(nilradical_completely_solvable(e2tilde()),
                  NotCompletelySolvable);
  CHECK_THROWS_AS(nilradical_completely_solvable(sl2()),
                  NotCompletelySolvable);
}

TEST_CASE("nilradical certificates") {
  for (const LieAlgebra& g :
       {heisenberg(), affine_line(), t2(), sqrt2_algebra()}) {
    Subspace n = nilradical_completely_solvable(g);
    CHECK(g.is_ideal(n));
    CHECK(subalgebra(g, n).is_nilpotent());
    CHECK(n.contains(g.bracket_space(g.full_space(), g.full_space())));
  }
}

TEST_CASE("quotients by flag members stay completely solvable") {
  for (const LieAlgebra& g : {heisenberg(), t2(), affine_line()}) {
    Flag f = complete_flag(g, FlagMode::Exact);
    for (const Subspace& member : f.exact) {
      QuotientResult q = quotient(g, member);
      CHECK(is_completely_solvable(q.algebra).kind ==
            SolvKind::CompletelySolvable);
    }
  }
}

TEST_CASE("verdicts are basis independent") {
  Rng rng(99);
  for (const LieAlgebra& g :
       {heisenberg(), affine_line(), sl2(), e2tilde(), t2(), sqrt2_algebra()}) {
    SolvKind expected = is_completely_solvable(g).kind;
    for (int it = 0; it < 6; ++it)
      CHECK(is_completely_solvable(random_basis_change(g, rng)).kind == expected);
  }
}

TEST_CASE("decision criteria agree on random solvable algebras") {
  Rng rng(2024);
  int not_completely = 0, completely = 0;
  for (int it = 0; it < 30; ++it) {
    LieAlgebra g = random_solvable(rng);
    SolvabilityVerdict v = is_completely_solvable(g);
    REQUIRE(v.kind != SolvKind::NotSolvable);
    SampledCheck sc = sampled_eigenvalue_check(g, 200, 1000 + it);
    CHECK(sc.all_real_rooted == v.completely_solvable());
    FlagSearchOutcome outcome = exact_flag_search(g);
    if (v.completely_solvable()) {
      ++completely;
      Flag nf = complete_flag(g, FlagMode::Numeric, 1e-8);
      CHECK(nf.max_residual <= 1e-8);
      if (outcome.flag) CHECK(verify_exact_flag(g, *outcome.flag));
    } else {
      ++not_completely;
      REQUIRE(outcome.blocking_factor.has_value());
      Poly factor = strip_rational_roots(*outcome.blocking_factor);
      CHECK(factor.degree() > 0);
      CHECK(real_root_count(factor) == 0);
    }
  }
  // the generator must exercise both verdicts
  CHECK(completely > 0);
  CHECK(not_completely > 0);
}
