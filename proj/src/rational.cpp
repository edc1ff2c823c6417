#include "solvcert/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "solvcert/errors.hpp"

namespace solvcert {

Rat::Rat(long n, long d) {
  if (d == 0) throw InvalidInput("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw InvalidInput("reciprocal of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::parse(const std::string& raw) {
  std::string s = raw;
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  size_t i = 0;
  auto digits = [&](size_t from) {
    size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (i < s.size() && s[i] == '-') ++i;
  size_t num_end = digits(i);
  if (num_end == i) throw InvalidInput("not a rational: '" + raw + "'");
  if (num_end != s.size()) {
    if (s[num_end] != '/') throw InvalidInput("not a rational: '" + raw + "'");
    size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != s.size())
      throw InvalidInput("not a rational: '" + raw + "'");
  }
  mpq_class v(s);
  if (v.get_den() == 0) throw InvalidInput("zero denominator: '" + raw + "'");
  v.canonicalize();
  return Rat(v);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rat& s, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

std::string str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace solvcert
