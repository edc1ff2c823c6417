#include "solvcert/poly.hpp"

#include <algorithm>
#include <sstream>

#include "solvcert/errors.hpp"

namespace solvcert {

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(RatVec coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rat& c) { return Poly(RatVec{c}); }

Poly Poly::variable() { return Poly(RatVec{Rat(0), Rat(1)}); }

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

Rat Poly::leading() const {
  if (is_zero()) throw InvalidInput("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  RatVec r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  RatVec r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  RatVec r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
  RatVec r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = s * c_[i];
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  RatVec r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) throw InvalidInput("monic of zero polynomial");
  return *this * leading().reciprocal();
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) throw InvalidInput("polynomial division by zero");
  Poly q;
  Poly r = *this;
  Rat lead_inv = d.leading().reciprocal();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rat f = r.leading() * lead_inv;
    RatVec t(k + 1);
    t[k] = f;
    Poly term(std::move(t));
    q = q + term;
    r = r - term * d;
  }
  return {q, r};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat a = c.abs();
    if (k == 0 || a != Rat(1)) os << a.str();
    if (k > 0) {
      if (a != Rat(1)) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("square-free part of zero polynomial");
  if (p.degree() == 0) return Poly::constant(Rat(1));
  Poly g = poly_gcd(p, p.derivative());
  return p.divrem(g).first.monic();
}

namespace {

// Sturm-type chain: p, p', then negated remainders until exhaustion.
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = chain[chain.size() - 2].divrem(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_at(const Poly& q, const SturmBound& b, bool minus_side) {
  if (q.is_zero()) return 0;
  if (!b.infinite) return q.eval(b.at).sign();
  int s = q.leading().sign();
  if (minus_side && q.degree() % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<Poly>& chain, const SturmBound& b,
               bool minus_side) {
  int count = 0, prev = 0;
  for (const Poly& q : chain) {
    int s = sign_at(q, b, minus_side);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int real_root_count_between(const Poly& p, const SturmBound& lo,
                            const SturmBound& hi) {
  if (p.is_zero()) throw InvalidInput("root count of zero polynomial");
  if (p.degree() == 0) return 0;
  if (!lo.infinite && p.eval(lo.at).is_zero())
    throw InvalidInput("Sturm bound is a root of p");
  if (!hi.infinite && p.eval(hi.at).is_zero())
    throw InvalidInput("Sturm bound is a root of p");
  auto chain = sturm_chain(p);
  bool lo_minus = lo.infinite && lo.at.sign() < 0;
  bool hi_minus = hi.infinite && hi.at.sign() < 0;
  return variations(chain, lo, lo_minus) - variations(chain, hi, hi_minus);
}

int real_root_count(const Poly& p) {
  return real_root_count_between(p, SturmBound::minus_inf(),
                                 SturmBound::plus_inf());
}

bool is_real_rooted(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("real-rootedness of zero polynomial");
  Poly sf = square_free_part(p);
  if (sf.degree() == 0) return true;
  return real_root_count(sf) == sf.degree();
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class v = ::abs(n);
  std::vector<mpz_class> ds;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      ds.push_back(d);
      mpz_class q = v / d;
      if (q != d) ds.push_back(q);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("rational roots of zero polynomial");
  std::vector<Rat> roots;
  if (p.degree() == 0) return roots;

  // Clear denominators to get an integer polynomial with the same roots.
  mpz_class scale = 1;
  for (const Rat& c : p.coeffs()) scale = lcm(scale, c.den());
  std::vector<mpz_class> a(p.coeffs().size());
  for (size_t i = 0; i < a.size(); ++i) {
    Rat s = p.coeffs()[i] * Rat(mpq_class(scale));
    a[i] = s.num();
  }
  size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 >= a.size()) {
    return roots;  // monomial: only root 0
  }
  for (const mpz_class& dn : divisors(a.back())) {
    for (const mpz_class& nm : divisors(a[low])) {
      for (int s : {1, -1}) {
        mpq_class cand(s * nm, dn);
        cand.canonicalize();
        Rat r{cand};
        if (p.eval(r).is_zero()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Rat& x, const Rat& y) {
    if (x.den() != y.den()) return x.den() < y.den();
    return x.num() < y.num();
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Poly strip_rational_roots(const Poly& p) {
  Poly q = p.monic();
  for (const Rat& r : rational_roots(p)) {
    Poly lin(RatVec{-r, Rat(1)});
    while (true) {
      auto [quot, rem] = q.divrem(lin);
      if (!rem.is_zero()) break;
      q = quot;
    }
  }
  return q.monic();
}

}  // namespace solvcert
