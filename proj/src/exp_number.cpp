#include "solvcert/exp_number.hpp"

#include <cmath>
#include <sstream>

namespace solvcert {

void ExpNumber::add_term(const Rat& r, const Rat& q) {
  if (q.is_zero()) return;
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(r, q);
    return;
  }
  it->second += q;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpNumber ExpNumber::term(const Rat& q, const Rat& r) {
  ExpNumber x;
  x.add_term(r, q);
  return x;
}

ExpNumber ExpNumber::operator-() const {
  ExpNumber x;
  for (const auto& [r, q] : terms_) x.terms_.emplace(r, -q);
  return x;
}

ExpNumber operator+(const ExpNumber& a, const ExpNumber& b) {
  ExpNumber x = a;
  for (const auto& [r, q] : b.terms_) x.add_term(r, q);
  return x;
}

ExpNumber operator-(const ExpNumber& a, const ExpNumber& b) { return a + (-b); }

ExpNumber operator*(const ExpNumber& a, const ExpNumber& b) {
  ExpNumber x;
  for (const auto& [ra, qa] : a.terms_)
    for (const auto& [rb, qb] : b.terms_) x.add_term(ra + rb, qa * qb);
  return x;
}

ExpNumber ExpNumber::operator*(const Rat& s) const {
  ExpNumber x;
  if (s.is_zero()) return x;
  for (const auto& [r, q] : terms_) x.terms_.emplace(r, s * q);
  return x;
}

bool ExpNumber::is_unit_exponential() const {
  return terms_.size() == 1 && terms_.begin()->second == Rat(1);
}

double ExpNumber::to_double() const {
  double acc = 0.0;
  for (const auto& [r, q] : terms_)
    acc += q.to_double() * std::exp(r.to_double());
  return acc;
}

std::string ExpNumber::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, q] : terms_) {
    if (!first) os << " + ";
    if (r.is_zero()) {
      os << q.str();
    } else {
      if (q != Rat(1)) os << q.str() << "*";
      os << "e^(" << r.str() << ")";
    }
    first = false;
  }
  return os.str();
}

}  // namespace solvcert
