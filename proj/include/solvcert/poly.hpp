#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solvcert/rational.hpp"

namespace solvcert {

/// Univariate polynomial over the rationals, coefficients stored lowest
/// degree first.  The zero polynomial has an empty coefficient vector;
/// otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RatVec coeffs);
  static Poly constant(const Rat& c);
  static Poly variable();  // T

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const RatVec& coeffs() const { return c_; }
  Rat coeff(int k) const;
  Rat leading() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rat& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;

  // Euclidean division; throws on zero divisor.
  std::pair<Poly, Poly> divrem(const Poly& d) const;

  std::string str(const std::string& var = "T") const;

 private:
  RatVec c_;
  void normalize();
};

/// Monic gcd of two polynomials (zero if both are zero).
Poly poly_gcd(Poly a, Poly b);

/// p / gcd(p, p'), made monic.  Throws InvalidInput on the zero polynomial.
Poly square_free_part(const Poly& p);

/// Number of distinct real roots of p, by Sturm's theorem over (-inf, inf).
/// Throws InvalidInput on the zero polynomial.
int real_root_count(const Poly& p);

/// Distinct real roots of p in the open interval (lo, hi) where the bounds
/// may be unbounded.  Finite bounds must not be roots of p.
struct SturmBound {
  bool infinite;
  Rat at;  // meaningful when !infinite
  static SturmBound minus_inf() { return {true, Rat(-1)}; }
  static SturmBound plus_inf() { return {true, Rat(1)}; }
  static SturmBound finite(const Rat& x) { return {false, x}; }
};
int real_root_count_between(const Poly& p, const SturmBound& lo,
                            const SturmBound& hi);

/// True iff every complex root of p is real.
bool is_real_rooted(const Poly& p);

/// All rational roots of p, each listed once, in ascending order by
/// (denominator, numerator).  Throws InvalidInput on the zero polynomial.
std::vector<Rat> rational_roots(const Poly& p);

/// p with all rational roots divided out (with multiplicity), made monic.
Poly strip_rational_roots(const Poly& p);

}  // namespace solvcert
