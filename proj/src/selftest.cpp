#include "solvcert/selftest.hpp"

#include <sstream>

#include "solvcert/catalog.hpp"
#include "solvcert/errors.hpp"
#include "solvcert/jordan.hpp"
#include "solvcert/presentation.hpp"
#include "solvcert/random_algebras.hpp"
#include "solvcert/representation.hpp"
#include "solvcert/rng.hpp"
#include "solvcert/solvability.hpp"
#include "solvcert/triangular_exp.hpp"

namespace solvcert {

namespace {

struct Checker {
  std::ostringstream failures;
  int checks = 0;
  int failed = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failed;
      if (failed <= 4) failures << what << "; ";
    }
  }

  SelftestResult finish(const std::string& suite) {
    if (failed == 0)
      return {suite, true, std::to_string(checks) + " checks"};
    return {suite, false,
            std::to_string(failed) + "/" + std::to_string(checks) +
                " failed: " + failures.str()};
  }
};

RatMatrix random_square(int n, Rng& rng, long box, long den) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(rng.uniform(-box, box), den);
  return m;
}

RatMatrix random_upper(int n, Rng& rng, long box, long den) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.at(i, j) = Rat(rng.uniform(-box, box), den);
  return m;
}

SelftestResult rational_ring(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  for (int it = 0; it < 100; ++it) {
    Rat a = rng.rational(), b = rng.rational(), x = rng.rational();
    c.expect((a + b) + x == a + (b + x), "associativity");
    c.expect(a * (b + x) == a * b + a * x, "distributivity");
    if (!a.is_zero()) c.expect(a * a.reciprocal() == Rat(1), "inverse");
  }
  return c.finish("rational-ring");
}

SelftestResult sturm_oracle(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  for (int it = 0; it < 60; ++it) {
    int budget = 6;
    std::vector<Rat> roots;
    Poly p = Poly::constant(Rat(1 + static_cast<long>(rng.uniform(0, 2))));
    int planted = static_cast<int>(rng.uniform(0, 3));
    for (int i = 0; i < planted && budget > 0; ++i) {
      Rat r = rng.rational(6, 2);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      int mult = static_cast<int>(rng.uniform(1, std::min(2L, (long)budget)));
      for (int m = 0; m < mult; ++m) p = p * Poly(RatVec{-r, Rat(1)});
      budget -= mult;
    }
    while (budget >= 2) {
      Rat a = rng.rational(4, 1);
      Rat b = a * a * Rat(1, 4) + Rat(rng.uniform(1, 5));
      p = p * Poly(RatVec{b, a, Rat(1)});
      budget -= 2;
    }
    if (p.degree() == 0) continue;
    c.expect(real_root_count(p) == static_cast<int>(roots.size()),
             "planted root count");
  }
  return c.finish("sturm-oracle");
}

SelftestResult cayley_hamilton(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  for (int it = 0; it < 40; ++it) {
    int n = static_cast<int>(rng.uniform(2, 5));
    RatMatrix m = random_square(n, rng, 4, 3);
    c.expect(eval_poly(char_poly(m), m).is_zero(), "Cayley-Hamilton");
  }
  return c.finish("cayley-hamilton");
}

SelftestResult kernel_rank(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  for (int it = 0; it < 30; ++it) {
    int r = static_cast<int>(rng.uniform(1, 4));
    int cols = static_cast<int>(rng.uniform(1, 5));
    RatMatrix m(r, cols);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(3, 2);
    auto basis = kernel(m);
    c.expect(rank(m) + static_cast<int>(basis.size()) == cols, "rank-nullity");
    for (const RatVec& v : basis)
      c.expect(is_zero(m.apply(v)), "kernel vector");
  }
  return c.finish("kernel-rank");
}

SelftestResult expnumber_ring(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  ExpNumber e1 = ExpNumber::term(Rat(1), Rat(1));
  c.expect(e1 * e1 == ExpNumber::term(Rat(1), Rat(2)), "e*e = e^2");
  for (int it = 0; it < 40; ++it) {
    auto rand_en = [&] {
      ExpNumber x;
      int terms = static_cast<int>(rng.uniform(0, 3));
      for (int t = 0; t < terms; ++t)
        x = x + ExpNumber::term(rng.rational(4, 2), rng.rational(3, 2));
      return x;
    };
    ExpNumber a = rand_en(), b = rand_en();
    c.expect((a + (-a)).terms().empty(), "canonical zero");
    ExpNumber s = a + b;
    bool clean = true;
    for (const auto& [r, q] : s.terms()) clean = clean && !q.is_zero();
    c.expect(clean, "no stored zero coefficients");
  }
  return c.finish("expnumber-ring");
}

SelftestResult ad_homomorphism(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  for (const CatalogEntry& e : catalog()) {
    const LieAlgebra& g = e.underlying_algebra();
    for (int it = 0; it < 6; ++it) {
      RatVec a(g.dim()), b(g.dim());
      for (int i = 0; i < g.dim(); ++i) {
        a[i] = rng.rational();
        b[i] = rng.rational();
      }
      RatMatrix lhs = g.ad_matrix(g.bracket(a, b));
      RatMatrix rhs =
          g.ad_matrix(a) * g.ad_matrix(b) - g.ad_matrix(b) * g.ad_matrix(a);
      c.expect(lhs == rhs, "ad homomorphism on " + e.name);
    }
  }
  return c.finish("ad-homomorphism");
}

SelftestResult lie_operations(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  for (const CatalogEntry& e : catalog()) {
    const LieAlgebra& g = e.underlying_algebra();
    for (auto series : {g.derived_series(), g.lower_central_series()})
      for (size_t i = 0; i + 2 < series.size(); ++i)
        c.expect(series[i].dim() > series[i + 1].dim(),
                 e.name + " series strictly decreasing");
    if (!g.is_solvable() ||
        !is_completely_solvable(g).completely_solvable())
      continue;
    Flag f;
    try {
      f = complete_flag(g, FlagMode::Exact);
    } catch (const NeedsIrrationalEigenvalue&) {
      continue;
    }
    for (const Subspace& member : f.exact) {
      QuotientResult q = quotient(g, member);
      c.expect(is_completely_solvable(q.algebra).completely_solvable(),
               e.name + " quotient by flag member stays completely solvable");
      for (int it = 0; it < 3; ++it) {
        RatVec a(g.dim()), b(g.dim());
        for (int i = 0; i < g.dim(); ++i) {
          a[i] = rng.rational();
          b[i] = rng.rational();
        }
        c.expect(q.projection.apply(g.bracket(a, b)) ==
                     q.algebra.bracket(q.projection.apply(a),
                                       q.projection.apply(b)),
                 e.name + " projection preserves brackets");
      }
    }
  }
  return c.finish("lie-operations");
}

SelftestResult jc_invariants(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  for (int it = 0; it < 20; ++it) {
    int n = static_cast<int>(rng.uniform(2, 5));
    RatMatrix m = random_square(n, rng, 3, 2);
    auto [s, nil] = jordan_chevalley(m);
    c.expect(s + nil == m, "sum");
    c.expect(s * nil == nil * s, "commuting parts");
    c.expect(nil.pow(n).is_zero(), "nilpotent part");
    c.expect(eval_poly(square_free_part(char_poly(m)), s).is_zero(),
             "annihilation");
  }
  return c.finish("jordan-chevalley");
}

SelftestResult exp_identities(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  c.expect(exp_triangular_exact(RatMatrix(3, 3)) == ExpMatrix::identity(3),
           "Exp(0) = I");
  for (int it = 0; it < 12; ++it) {
    int n = static_cast<int>(rng.uniform(2, 4));
    RatMatrix m = random_upper(n, rng, 2, 1);
    auto [s, nil] = jordan_chevalley(m);
    c.expect(exp_triangular_exact(m) ==
                 exp_triangular_exact(s) * exp_triangular_exact(nil),
             "Exp(S+N) = Exp(S)Exp(N)");
    ExpMatrix e = exp_triangular_exact(m);
    c.expect(e.in_positive_triangular_group(), "image in T+");
  }
  for (int n : {3, 4}) {
    for (int it = 0; it < 10; ++it) {
      RatMatrix x = random_upper(n, rng, 8, 4);
      Eigen::MatrixXd xd = to_double(x);
      Eigen::MatrixXd back =
          log_triangular_positive(exp_triangular_numeric(xd), 1e-9);
      c.expect((back - xd).lpNorm<Eigen::Infinity>() <= 1e-9,
               "log(exp(X)) = X");
    }
  }
  return c.finish("exp-identities");
}

SelftestResult flag_certificates(std::uint64_t seed) {
  Checker c;
  (void)seed;
  for (const CatalogEntry& e : catalog()) {
    const LieAlgebra& g = e.underlying_algebra();
    if (!e.expect_solv_kind ||
        *e.expect_solv_kind != SolvKind::CompletelySolvable)
      continue;
    try {
      Flag f = complete_flag(g, FlagMode::Exact);
      c.expect(verify_exact_flag(g, f), "exact flag on " + e.name);
    } catch (const NeedsIrrationalEigenvalue&) {
      Flag nf = complete_flag(g, FlagMode::Numeric, 1e-8);
      c.expect(nf.max_residual <= 1e-8, "numeric flag on " + e.name);
    }
  }
  return c.finish("flag-certificates");
}

SelftestResult decision_coherence(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  std::vector<LieAlgebra> algebras;
  for (const CatalogEntry& e : catalog())
    if (e.underlying_algebra().is_solvable())
      algebras.push_back(e.underlying_algebra());
  for (int it = 0; it < 25; ++it) algebras.push_back(random_solvable(rng));
  int idx = 0;
  for (const LieAlgebra& g : algebras) {
    SolvabilityVerdict v = is_completely_solvable(g);
    SampledCheck sc = sampled_eigenvalue_check(g, 120, seed + 17 * idx++);
    c.expect(sc.all_real_rooted == v.completely_solvable(),
             "sampled check agrees");
    FlagSearchOutcome outcome = exact_flag_search(g);
    if (v.completely_solvable()) {
      Flag nf = complete_flag(g, FlagMode::Numeric, 1e-8);
      c.expect(nf.max_residual <= 1e-8, "numeric flag exists");
    } else {
      c.expect(outcome.blocking_factor.has_value(), "flag search blocked");
      if (outcome.blocking_factor) {
        Poly f = strip_rational_roots(*outcome.blocking_factor);
        c.expect(f.degree() > 0 && real_root_count(f) == 0,
                 "no real eigenvalue at the blocked level");
      }
    }
  }
  return c.finish("decision-coherence");
}

SelftestResult catalog_verdicts(std::uint64_t seed) {
  Checker c;
  (void)seed;
  for (const CatalogEntry& e : catalog()) {
    const LieAlgebra& g = e.underlying_algebra();
    c.expect(g.is_solvable() == e.expect_solvable, e.name + " solvable");
    c.expect(g.is_nilpotent() == e.expect_nilpotent, e.name + " nilpotent");
    if (e.expect_solv_kind)
      c.expect(is_completely_solvable(g).kind == *e.expect_solv_kind,
               e.name + " solvability kind");
    if (e.expect_def_kind) {
      DefinabilityVerdict v = e.presentation
                                  ? classify_group(*e.presentation)
                                  : classify_simply_connected(g);
      c.expect(v.kind == *e.expect_def_kind, e.name + " definability");
    }
  }
  return c.finish("catalog-verdicts");
}

SelftestResult basis_invariance(std::uint64_t seed) {
  Checker c;
  Rng rng(seed);
  for (const CatalogEntry& e : catalog()) {
    const LieAlgebra& g = e.underlying_algebra();
    SolvKind expected = is_completely_solvable(g).kind;
    for (int it = 0; it < 5; ++it) {
      LieAlgebra conj = random_basis_change(g, rng);
      c.expect(is_completely_solvable(conj).kind == expected,
               e.name + " under change of basis");
    }
  }
  return c.finish("basis-invariance");
}

SelftestResult representation_certificates(std::uint64_t seed) {
  Checker c;
  (void)seed;
  for (const CatalogEntry& e : catalog()) {
    if (!e.algebra) continue;
    const LieAlgebra& g = *e.algebra;
    if (!is_completely_solvable(g).completely_solvable()) continue;
    try {
      Representation rep = faithful_triangular_rep(g);
      c.expect(rep.is_faithful, e.name + " faithful");
      c.expect(rep.is_triangular, e.name + " triangular");
      c.expect(verify_homomorphism(g, rep), e.name + " homomorphism");
      if (e.name == "heisenberg") {
        c.expect(rep.tier == RepTier::NilpotentPBW, "heisenberg tier");
        c.expect(rep.target_dim == 10, "heisenberg dimension 10");
      }
    } catch (const NeedsIrrationalEigenvalue&) {
      c.expect(e.name == "sqrt2",
               e.name + ": only irrational weights may block the embedding");
    }
  }
  return c.finish("representation-certificates");
}

SelftestResult nilradical_certificates(std::uint64_t seed) {
  Checker c;
  (void)seed;
  for (const CatalogEntry& e : catalog()) {
    if (!e.algebra) continue;
    const LieAlgebra& g = *e.algebra;
    if (!is_completely_solvable(g).completely_solvable()) continue;
    Subspace n = nilradical_completely_solvable(g);
    c.expect(g.is_ideal(n), e.name + " nilradical ideal");
    c.expect(subalgebra(g, n).is_nilpotent(), e.name + " nilradical nilpotent");
    c.expect(n.contains(g.bracket_space(g.full_space(), g.full_space())),
             e.name + " contains derived algebra");
  }
  return c.finish("nilradical-certificates");
}

SelftestResult group_classification(std::uint64_t seed) {
  Checker c;
  (void)seed;
  const CatalogEntry* compact = catalog_lookup("r2-rtimes-so2");
  const CatalogEntry* cover = catalog_lookup("e2tilde-group");
  c.expect(compact && cover, "catalog presentations present");
  if (compact && cover) {
    c.expect(classify_group(*compact->presentation).kind == DefKind::Definable,
             "compact torus action definable");
    c.expect(classify_group(*cover->presentation).kind == DefKind::NotDefinable,
             "simply connected cover not definable");
  }
  for (const CatalogEntry& e : catalog()) {
    if (!e.algebra || !e.algebra->is_solvable()) continue;
    GroupPresentation p{*e.algebra, 0, {}};
    c.expect(classify_group(p).kind == classify_simply_connected(*e.algebra).kind,
             e.name + " rank-zero agreement");
  }
  return c.finish("group-classification");
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
  std::vector<SelftestResult> results;
  results.push_back(rational_ring(seed + 1));
  results.push_back(sturm_oracle(seed + 2));
  results.push_back(cayley_hamilton(seed + 3));
  results.push_back(kernel_rank(seed + 4));
  results.push_back(expnumber_ring(seed + 5));
  results.push_back(ad_homomorphism(seed + 6));
  results.push_back(lie_operations(seed + 16));
  results.push_back(jc_invariants(seed + 7));
  results.push_back(exp_identities(seed + 8));
  results.push_back(flag_certificates(seed + 9));
  results.push_back(decision_coherence(seed + 10));
  results.push_back(catalog_verdicts(seed + 11));
  results.push_back(basis_invariance(seed + 12));
  results.push_back(representation_certificates(seed + 13));
  results.push_back(nilradical_certificates(seed + 14));
  results.push_back(group_classification(seed + 15));
  return results;
}

bool all_passed(const std::vector<SelftestResult>& results) {
  for (const SelftestResult& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace solvcert
