#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvcert/errors.hpp"
#include "solvcert/jordan.hpp"
#include "solvcert/random_algebras.hpp"
#include "solvcert/representation.hpp"
#include "solvcert/rng.hpp"
#include "solvcert/triangular_exp.hpp"

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

LieAlgebra t2() {
  return LieAlgebra(3, {"E11", "E22", "E12"},
                    {vec3(0, 0, 0), vec3(0, 0, 1), vec3(0, 0, -1)});
}

// affine line + Heisenberg: center meets the derived algebra, not nilpotent,
// and the nilradical splits off an abelian line.
LieAlgebra affine_plus_heisenberg() {
  RatMatrix d(4, 4);
  d.at(0, 0) = Rat(1);  // scales the abelian y, fixes the Heisenberg block
  LieAlgebra core(4, {"y", "hx", "hy", "hz"},
                  {RatVec(4, Rat(0)), RatVec(4, Rat(0)), RatVec(4, Rat(0)),
                   RatVec{Rat(0), Rat(0), Rat(0), Rat(1)}, RatVec(4, Rat(0)),
                   RatVec(4, Rat(0))});
  return semidirect_sum(core, {d}, {"x"});
}

// Heisenberg extended by the derivation diag(1, -1, 0).
LieAlgebra oscillator_like() {
  RatMatrix d(3, 3);
  d.at(0, 0) = Rat(1);
  d.at(1, 1) = Rat(-1);
  return semidirect_sum(heisenberg(), {d}, {"t"});
}

RatMatrix mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  RatMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

RatMatrix random_upper(int n, Rng& rng, long box = 2, long den = 1) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.at(i, j) = Rat(rng.uniform(-box, box), den);
  return m;
}

}  // namespace

TEST_CASE("jordan_chevalley examples") {
  auto jc = jordan_chevalley(mat2(Rat(1), Rat(1), Rat(0), Rat(1)));
  CHECK(jc.semisimple == RatMatrix::identity(2));
  CHECK(jc.nilpotent == mat2(Rat(0), Rat(1), Rat(0), Rat(0)));

  RatMatrix diag = mat2(Rat(2), Rat(0), Rat(0), Rat(-3));
  auto jc2 = jordan_chevalley(diag);
  CHECK(jc2.semisimple == diag);
  CHECK(jc2.nilpotent.is_zero());

  RatMatrix rot = mat2(Rat(0), Rat(1), Rat(-1), Rat(0));
  auto jc3 = jordan_chevalley(rot);
  CHECK(jc3.semisimple == rot);  // semisimple despite non-real eigenvalues
  CHECK(jc3.nilpotent.is_zero());
}

TEST_CASE("jordan_chevalley invariants on random matrices") {
  Rng rng(31);
  for (int it = 0; it < 40; ++it) {
    int n = static_cast<int>(rng.uniform(2, 5));
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Rat(rng.uniform(-3, 3), 2);
    auto [s, nil] = jordan_chevalley(m);
    CHECK(s + nil == m);
    CHECK(s * nil == nil * s);
    CHECK(nil.pow(n).is_zero());
    CHECK(eval_poly(square_free_part(char_poly(m)), s).is_zero());
  }
}

TEST_CASE("exact exponential examples") {
  // nilpotent: series terminates
  RatMatrix n12 = mat2(Rat(0), Rat(1), Rat(0), Rat(0));
  ExpMatrix e = exp_triangular_exact(n12);
  CHECK(e.at(0, 0) == ExpNumber::one());
  CHECK(e.at(0, 1) == ExpNumber::one());
  CHECK(e.at(1, 0) == ExpNumber::zero());
  CHECK(e.at(1, 1) == ExpNumber::one());

  // diagonal
  ExpMatrix d = exp_triangular_exact(mat2(Rat(1, 2), Rat(0), Rat(0), Rat(-3)));
  CHECK(d.at(0, 0) == ExpNumber::term(Rat(1), Rat(1, 2)));
  CHECK(d.at(1, 1) == ExpNumber::term(Rat(1), Rat(-3)));
  CHECK(d.at(0, 1) == ExpNumber::zero());

  // Jordan block: e * (I + E12)
  ExpMatrix j = exp_triangular_exact(mat2(Rat(1), Rat(1), Rat(0), Rat(1)));
  CHECK(j.at(0, 0) == ExpNumber::term(Rat(1), Rat(1)));
  CHECK(j.at(0, 1) == ExpNumber::term(Rat(1), Rat(1)));
  CHECK(j.at(1, 1) == ExpNumber::term(Rat(1), Rat(1)));
  CHECK(j.at(1, 0) == ExpNumber::zero());

  CHECK_THROWS_AS(exp_triangular_exact(mat2(Rat(0), Rat(0), Rat(1), Rat(0))),
                  NotTriangular);
}

TEST_CASE("exact exponential lands in the positive triangular group") {
  Rng rng(41);
  for (int it = 0; it < 30; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    RatMatrix x = random_upper(n, rng, 2, 2);
    ExpMatrix e = exp_triangular_exact(x);
    CHECK(e.in_positive_triangular_group());
    // numeric cross-check
    Eigen::MatrixXd num = exp_triangular_numeric(to_double(x));
    CHECK((e.to_double() - num).lpNorm<Eigen::Infinity>() <= 1e-12);
  }
}

TEST_CASE("exp identities") {
  CHECK(exp_triangular_exact(RatMatrix(3, 3)) == ExpMatrix::identity(3));

  Rng rng(43);
  for (int it = 0; it < 25; ++it) {
    int n = static_cast<int>(rng.uniform(2, 4));
    RatMatrix m = random_upper(n, rng, 2, 1);
    auto [s, nil] = jordan_chevalley(m);
    // Exp(s + nil) = Exp(s) * Exp(nil) for the commuting parts, exactly
    CHECK(exp_triangular_exact(m) ==
          exp_triangular_exact(s) * exp_triangular_exact(nil));
  }
}

TEST_CASE("one-parameter subgroups") {
  RatMatrix x = mat2(Rat(1), Rat(1), Rat(0), Rat(1));
  CHECK(one_parameter_exact(x, Rat(0)) == ExpMatrix::identity(2));

  RatMatrix e12 = mat2(Rat(0), Rat(1), Rat(0), Rat(0));
  ExpMatrix three = one_parameter_exact(e12, Rat(3));
  CHECK(three.at(0, 1) == ExpNumber::rational(Rat(3)));

  // Exp((s+t)X) = Exp(sX) Exp(tX) with (s, t) = (1, 2)
  CHECK(one_parameter_exact(x, Rat(3)) ==
        one_parameter_exact(x, Rat(1)) * one_parameter_exact(x, Rat(2)));

  // numeric path agrees with the exact one
  CHECK((one_parameter_numeric(x, Rat(1, 2)) -
         one_parameter_exact(x, Rat(1, 2)).to_double())
            .lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("numeric log examples") {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
  CHECK(log_triangular_positive(id).lpNorm<Eigen::Infinity>() == 0.0);

  Eigen::MatrixXd u(2, 2);
  u << 1, 1, 0, 1;
  Eigen::MatrixXd lu = log_triangular_positive(u);
  CHECK(lu(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lu(0, 0) == doctest::Approx(0.0).epsilon(1e-12));

  Eigen::MatrixXd bad(2, 2);
  bad << 1, 0, 1, 1;
  CHECK_THROWS_AS(log_triangular_positive(bad), NotTriangular);
  Eigen::MatrixXd neg(2, 2);
  neg << -1, 0, 0, 1;
  CHECK_THROWS_AS(log_triangular_positive(neg), NonPositiveDiagonal);
}

TEST_CASE("log recovers exp on random triangular matrices") {
  Rng rng(47);
  for (int n : {3, 4}) {
    for (int it = 0; it < 30; ++it) {
      RatMatrix x = random_upper(n, rng, 8, 4);  // entries in [-2, 2]
      Eigen::MatrixXd xd = to_double(x);
      Eigen::MatrixXd t = exp_triangular_numeric(xd);
      Eigen::MatrixXd back = log_triangular_positive(t, 1e-9);
      CHECK((back - xd).lpNorm<Eigen::Infinity>() <= 1e-9);
    }
  }
}

TEST_CASE("triangularize_ad") {
  LieAlgebra aff = affine_line();
  Flag faff = complete_flag(aff, FlagMode::Exact);
  Representation r = triangularize_ad(aff, faff);
  CHECK(r.target_dim == 2);
  CHECK(r.is_triangular);
  CHECK(r.is_faithful);  // centerless
  CHECK(verify_homomorphism(aff, r));

  LieAlgebra h = heisenberg();
  Representation rh = triangularize_ad(h, complete_flag(h, FlagMode::Exact));
  CHECK(rh.is_triangular);
  CHECK_FALSE(rh.is_faithful);  // z acts trivially

  LieAlgebra ab = LieAlgebra::abelian(2);
  Representation rab = triangularize_ad(ab, complete_flag(ab, FlagMode::Exact));
  CHECK(rab.is_triangular);
  CHECK_FALSE(rab.is_faithful);
  for (const RatMatrix& m : rab.matrices) CHECK(m.is_zero());

  Flag numeric = complete_flag(h, FlagMode::Numeric);
  CHECK_THROWS_AS(triangularize_ad(h, numeric), InvalidInput);

  // a flag of a different algebra is not a flag of this one
  Flag foreign = complete_flag(t2(), FlagMode::Exact);
  CHECK_THROWS_AS(triangularize_ad(h, foreign), InvalidInput);
}

TEST_CASE("faithful representation tiers") {
  Representation aff = faithful_triangular_rep(affine_line());
  CHECK(aff.tier == RepTier::AdCenterless);
  CHECK(aff.target_dim == 2);
  CHECK(aff.is_faithful);
  CHECK(aff.is_triangular);

  Representation ab = faithful_triangular_rep(LieAlgebra::abelian(2));
  CHECK(ab.tier == RepTier::AdPlusCharacters);
  CHECK(ab.target_dim == 2);
  CHECK(ab.is_faithful);
  CHECK(ab.is_triangular);

  Representation rt2 = faithful_triangular_rep(t2());
  CHECK(rt2.tier == RepTier::AdPlusCharacters);
  CHECK(rt2.target_dim == 4);  // 3x3 adjoint block + 1 character
  CHECK(rt2.is_faithful);
  CHECK(rt2.is_triangular);

  Representation h = faithful_triangular_rep(heisenberg());
  CHECK(h.tier == RepTier::NilpotentPBW);
  CHECK(h.target_dim == 10);  // monomials of degree <= 2 in 3 generators
  CHECK(h.is_faithful);
  CHECK(h.is_triangular);
  CHECK(verify_homomorphism(heisenberg(), h));

  Representation split = faithful_triangular_rep(affine_plus_heisenberg());
  CHECK(split.tier == RepTier::SplitOverNilradical);
  CHECK(split.is_faithful);
  CHECK(split.is_triangular);
  CHECK(verify_homomorphism(affine_plus_heisenberg(), split));

  Representation osc = faithful_triangular_rep(oscillator_like());
  CHECK(osc.tier == RepTier::SplitOverNilradical);
  CHECK(osc.is_faithful);
  CHECK(osc.is_triangular);
  CHECK(verify_homomorphism(oscillator_like(), osc));
}

TEST_CASE("faithful representation error routes") {
  RatMatrix rot(2, 2);
  rot.at(0, 1) = Rat(1);
  rot.at(1, 0) = Rat(-1);
  LieAlgebra e2 = semidirect_sum(LieAlgebra::abelian(2), {rot}, {"X"});
  CHECK_THROWS_AS(faithful_triangular_rep(e2), NotCompletelySolvable);

  // eigenvalues +-sqrt(2): exact embedding impossible
  LieAlgebra sqrt2(3, {"x", "e1", "e2"},
                   {vec3(0, 0, 1), vec3(0, 2, 0), vec3(0, 0, 0)});
  CHECK_THROWS_AS(faithful_triangular_rep(sqrt2), NeedsIrrationalEigenvalue);

  CHECK_THROWS_AS(faithful_triangular_rep(heisenberg(), 5), SizeError);
}

TEST_CASE("enveloping tier is triangular for non-adapted input bases") {
  // Heisenberg with the central element listed first: left multiplication is
  // not triangular in raw input order, the adapted generator basis fixes it.
  LieAlgebra permuted(3, {"z", "x", "y"},
                      {vec3(0, 0, 0), vec3(0, 0, 0), vec3(1, 0, 0)});
  Representation rep = faithful_triangular_rep(permuted);
  CHECK(rep.tier == RepTier::NilpotentPBW);
  CHECK(rep.target_dim == 10);
  CHECK(rep.is_triangular);
  CHECK(rep.is_faithful);
  CHECK(verify_homomorphism(permuted, rep));
}

TEST_CASE("enveloping tier on a class-3 filiform algebra") {
  // [x,y] = z, [x,z] = w
  RatVec zero(4, Rat(0));
  RatVec ez{Rat(0), Rat(0), Rat(1), Rat(0)};
  RatVec ew{Rat(0), Rat(0), Rat(0), Rat(1)};
  LieAlgebra filiform(4, {"x", "y", "z", "w"}, {ez, ew, zero, zero, zero, zero});
  REQUIRE(filiform.nilpotency_class() == 3);
  Representation rep = faithful_triangular_rep(filiform);
  CHECK(rep.tier == RepTier::NilpotentPBW);
  // of the C(4+3,3) = 35 monomials of degree <= 3, eleven are absorbed into
  // the truncation ideal by iterated bracket corrections (class >= 3)
  CHECK(rep.target_dim == 24);
  CHECK(rep.is_triangular);
  CHECK(rep.is_faithful);
  CHECK(verify_homomorphism(filiform, rep));
}

TEST_CASE("split tier with a defective complement action") {
  // N = heisenberg + abelian w; t acts by x -> x+w, y -> -y: the action on
  // the first graded layer has a Jordan block, so the within-level flag
  // refinement is essential.
  RatVec zero(4, Rat(0));
  RatVec ez{Rat(0), Rat(0), Rat(1), Rat(0)};
  LieAlgebra core(4, {"x", "y", "z", "w"}, {ez, zero, zero, zero, zero, zero});
  RatMatrix d(4, 4);
  d.at(0, 0) = Rat(1);   // x -> x + w
  d.at(3, 0) = Rat(1);
  d.at(1, 1) = Rat(-1);  // y -> -y
  d.at(3, 3) = Rat(1);   // w -> w
  LieAlgebra g = semidirect_sum(core, {d}, {"t"});
  REQUIRE(is_completely_solvable(g).completely_solvable());
  Representation rep = faithful_triangular_rep(g);
  CHECK(rep.tier == RepTier::SplitOverNilradical);
  CHECK(rep.is_triangular);
  CHECK(rep.is_faithful);
  CHECK(verify_homomorphism(g, rep));
}

TEST_CASE("representations of random completely solvable algebras") {
  Rng rng(53);
  int built = 0;
  for (int it = 0; it < 25 || built < 8; ++it) {
    if (it > 120) break;
    LieAlgebra g = random_solvable(rng);
    if (!is_completely_solvable(g).completely_solvable()) continue;
    Representation rep;
    try {
      rep = faithful_triangular_rep(g);
    } catch (const NeedsIrrationalEigenvalue&) {
      continue;
    } catch (const UnsupportedAdoCase&) {
      continue;
    }
    ++built;
    CHECK(rep.is_faithful);
    CHECK(rep.is_triangular);
    CHECK(verify_homomorphism(g, rep));
  }
  CHECK(built >= 8);
}
