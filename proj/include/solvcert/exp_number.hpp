#pragma once

#include <map>
#include <string>

#include "solvcert/rational.hpp"

namespace solvcert {

/// Exact scalar of the form sum q_i * e^{r_i} with rational q_i, r_i.
/// The term map is canonical: exponents are distinct and no coefficient is
/// zero, so equality of values is equality of maps (exponentials of distinct
/// rationals are linearly independent over the rationals).  Only ring
/// operations and equality are provided; deciding the sign of such a sum
/// exactly is out of reach, so ordering is intentionally absent and
/// to_double() is the numeric escape hatch.
class ExpNumber {
 public:
  ExpNumber() = default;
  static ExpNumber zero() { return ExpNumber(); }
  static ExpNumber one() { return term(Rat(1), Rat(0)); }
  static ExpNumber rational(const Rat& q) { return term(q, Rat(0)); }
  /// q * e^r
  static ExpNumber term(const Rat& q, const Rat& r);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Rat, Rat>& terms() const { return terms_; }

  ExpNumber operator-() const;
  friend ExpNumber operator+(const ExpNumber& a, const ExpNumber& b);
  friend ExpNumber operator-(const ExpNumber& a, const ExpNumber& b);
  friend ExpNumber operator*(const ExpNumber& a, const ExpNumber& b);
  ExpNumber operator*(const Rat& s) const;
  friend bool operator==(const ExpNumber& a, const ExpNumber& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExpNumber& a, const ExpNumber& b) {
    return !(a == b);
  }

  /// True iff the value is exactly one term 1*e^r.
  bool is_unit_exponential() const;

  double to_double() const;
  std::string str() const;

 private:
  // exponent -> coefficient
  std::map<Rat, Rat> terms_;
  void add_term(const Rat& r, const Rat& q);
};

}  // namespace solvcert
