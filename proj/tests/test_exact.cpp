#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvcert/errors.hpp"
#include "solvcert/exp_number.hpp"
#include "solvcert/poly.hpp"
#include "solvcert/rat_matrix.hpp"
#include "solvcert/rational.hpp"
#include "solvcert/rng.hpp"

using namespace solvcert;

namespace {

RatMatrix mat2(long a, long b, long c, long d) {
  RatMatrix m(2, 2);
  m.at(0, 0) = Rat(a);
  m.at(0, 1) = Rat(b);
  m.at(1, 0) = Rat(c);
  m.at(1, 1) = Rat(d);
  return m;
}

Poly poly(std::initializer_list<long> lowest_first) {
  RatVec c;
  for (long x : lowest_first) c.push_back(Rat(x));
  return Poly(c);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(3, 7).reciprocal() == Rat(7, 3));
  CHECK(Rat(-5).str() == "-5");
  CHECK(Rat(-5, 10).str() == "-1/2");
  CHECK(Rat::parse("3/9") == Rat(1, 3));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat::parse("+2/4") == Rat(1, 2));
  CHECK_THROWS_AS(Rat::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rat::parse("1.5"), InvalidInput);
  CHECK_THROWS_AS(Rat::parse(""), InvalidInput);
  CHECK_THROWS_AS(Rat::parse("2/"), InvalidInput);
  CHECK_THROWS_AS(Rat(1, 0), InvalidInput);
  CHECK_THROWS_AS(Rat(1) / Rat(0), InvalidInput);
}

TEST_CASE("rational ring axioms on random values") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rat(0));
    if (!a.is_zero()) CHECK(a * a.reciprocal() == Rat(1));
  }
}

TEST_CASE("polynomial arithmetic and division") {
  Poly p = poly({-1, 0, 1});  // T^2 - 1
  Poly d = poly({-1, 1});     // T - 1
  auto [q, r] = p.divrem(d);
  CHECK(q == poly({1, 1}));
  CHECK(r.is_zero());
  CHECK(p.eval(Rat(3)) == Rat(8));
  CHECK(p.derivative() == poly({0, 2}));
  CHECK(poly_gcd(p, d) == poly({-1, 1}));
  CHECK_THROWS_AS(p.divrem(Poly()), InvalidInput);
}

TEST_CASE("char_poly small cases") {
  CHECK(char_poly(RatMatrix::identity(2)) == poly({1, -2, 1}));
  CHECK(char_poly(mat2(0, 1, -1, 0)) == poly({1, 0, 1}));
  CHECK(char_poly(RatMatrix(3, 3)) == poly({0, 0, 0, 1}));
  CHECK_THROWS_AS(char_poly(RatMatrix(2, 3)), DimensionError);
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  Rng rng(23);
  for (int it = 0; it < 60; ++it) {
    int n = static_cast<int>(rng.uniform(2, 5));
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rng.rational(5, 3);
    CHECK(eval_poly(char_poly(m), m).is_zero());
  }
}

TEST_CASE("real_root_count examples") {
  CHECK(real_root_count(poly({1, 0, 1})) == 0);   // T^2 + 1
  CHECK(real_root_count(poly({-2, 0, 1})) == 2);  // T^2 - 2
  CHECK(real_root_count(poly({1, -2, 1})) == 1);  // (T-1)^2
  CHECK_THROWS_AS(real_root_count(Poly()), InvalidInput);
}

TEST_CASE("is_real_rooted examples") {
  CHECK(is_real_rooted(poly({0, 0, 0, 1})));      // T^3
  CHECK_FALSE(is_real_rooted(poly({1, 0, 1})));   // T^2 + 1
  CHECK(is_real_rooted(poly({0, -2, 0, 1})));     // T^3 - 2T
  CHECK_THROWS_AS(is_real_rooted(Poly()), InvalidInput);
}

TEST_CASE("square_free_part examples") {
  CHECK(square_free_part(poly({1, -2, 1})) == poly({-1, 1}));
  CHECK(square_free_part(poly({1, 0, 1})) == poly({1, 0, 1}));
  // T^3 * (T^2 - 2) = T^5 - 2 T^3  ->  T^3 - 2T
  CHECK(square_free_part(poly({0, 0, 0, -2, 0, 1})) == poly({0, -2, 0, 1}));
  CHECK_THROWS_AS(square_free_part(Poly()), InvalidInput);
}

TEST_CASE("Sturm count matches planted real roots") {
  Rng rng(37);
  for (int it = 0; it < 100; ++it) {
    // Plant k distinct rational roots (with multiplicities) and pad with
    // quadratics of negative discriminant; total degree <= 6.
    int budget = 6;
    std::vector<Rat> roots;
    Poly p = Poly::constant(Rat(rng.uniform(1, 3)));
    int k = static_cast<int>(rng.uniform(0, 3));
    for (int i = 0; i < k && budget > 0; ++i) {
      Rat r;
      bool fresh = false;
      for (int tries = 0; tries < 20 && !fresh; ++tries) {
        r = rng.rational(6, 2);
        fresh = std::find(roots.begin(), roots.end(), r) == roots.end();
      }
      if (!fresh) break;
      int mult = static_cast<int>(rng.uniform(1, std::min(2L, (long)budget)));
      roots.push_back(r);
      for (int m = 0; m < mult; ++m) p = p * Poly(RatVec{-r, Rat(1)});
      budget -= mult;
    }
    while (budget >= 2) {
      Rat a = rng.rational(4, 1);
      Rat b = a * a * Rat(1, 4) + Rat(rng.uniform(1, 5));  // disc < 0
      p = p * Poly(RatVec{b, a, Rat(1)});
      budget -= 2;
    }
    if (p.degree() == 0) continue;
    CHECK(real_root_count(p) == static_cast<int>(roots.size()));
  }
}

TEST_CASE("interval root counts") {
  Poly p = poly({-2, 0, 1});  // roots +-sqrt(2)
  CHECK(real_root_count_between(p, SturmBound::minus_inf(),
                                SturmBound::finite(Rat(0))) == 1);
  CHECK(real_root_count_between(p, SturmBound::finite(Rat(0)),
                                SturmBound::plus_inf()) == 1);
  Poly q = poly({2, 3, 1});  // (T+1)(T+2)
  CHECK(real_root_count_between(q, SturmBound::minus_inf(),
                                SturmBound::finite(Rat(0))) == 2);
}

TEST_CASE("rational_roots finds and orders roots") {
  // (T - 1/2)(T + 3)(T^2 + 1), scaled by 2
  Poly p = Poly(RatVec{Rat(-1, 2), Rat(1)}) * poly({3, 1}) * poly({1, 0, 1});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rat(-3));   // (den,num) = (1,-3) before (2,1)
  CHECK(roots[1] == Rat(1, 2));
  CHECK(strip_rational_roots(p) == poly({1, 0, 1}));

  Poly cubes = poly({0, 0, 0, 1});  // T^3
  auto r2 = rational_roots(cubes);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == Rat(0));
  CHECK(strip_rational_roots(cubes) == poly({1}));
}

TEST_CASE("kernel examples and properties") {
  CHECK(kernel(RatMatrix::identity(2)).empty());

  RatMatrix row1(1, 2);
  row1.at(0, 0) = Rat(1);
  row1.at(0, 1) = Rat(1);
  auto k1 = kernel(row1);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == RatVec{Rat(-1), Rat(1)});

  auto k2 = kernel(mat2(1, 2, 2, 4));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == RatVec{Rat(-2), Rat(1)});

  Rng rng(51);
  for (int it = 0; it < 40; ++it) {
    int r = static_cast<int>(rng.uniform(1, 4));
    int c = static_cast<int>(rng.uniform(1, 5));
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rng.rational(3, 2);
    auto basis = kernel(m);
    CHECK(rank(m) + static_cast<int>(basis.size()) == c);
    for (const RatVec& v : basis) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("solve and inverse") {
  RatMatrix m = mat2(1, 2, 3, 4);
  RatVec b{Rat(5), Rat(11)};
  CHECK(m.apply(solve(m, b)) == b);
  CHECK(inverse(m) * m == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(mat2(1, 2, 2, 4)), InvalidInput);
  CHECK_THROWS_AS(solve(mat2(1, 1, 1, 1), RatVec{Rat(0), Rat(1)}),
                  InvalidInput);
}

TEST_CASE("exp-number ring is canonical") {
  ExpNumber e1 = ExpNumber::term(Rat(1), Rat(1));
  ExpNumber e2 = ExpNumber::term(Rat(1), Rat(2));
  CHECK(e1 * e1 == e2);                       // e^1 * e^1 = e^2
  CHECK((e1 - e1).is_zero());
  CHECK((e1 + (-e1)).terms().empty());
  CHECK(e1 * ExpNumber::one() == e1);
  CHECK(ExpNumber::rational(Rat(2)) + ExpNumber::rational(Rat(-2)) ==
        ExpNumber::zero());
  CHECK(e1.is_unit_exponential());
  CHECK_FALSE((e1 + e2).is_unit_exponential());

  Rng rng(67);
  for (int it = 0; it < 50; ++it) {
    auto rand_en = [&] {
      ExpNumber x;
      int terms = static_cast<int>(rng.uniform(0, 3));
      for (int t = 0; t < terms; ++t)
        x = x + ExpNumber::term(rng.rational(4, 2), rng.rational(3, 2));
      return x;
    };
    ExpNumber a = rand_en(), b = rand_en(), c = rand_en();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    ExpNumber s = a + b;
    for (const auto& [r, q] : s.terms()) CHECK_FALSE(q.is_zero());
  }
}

TEST_CASE("exp-number numeric conversion") {
  ExpNumber x = ExpNumber::term(Rat(2), Rat(1)) + ExpNumber::rational(Rat(1, 2));
  CHECK(x.to_double() == doctest::Approx(2.0 * std::exp(1.0) + 0.5));
}
