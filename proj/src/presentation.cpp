#include "solvcert/presentation.hpp"

#include "solvcert/errors.hpp"

namespace solvcert {

std::string to_string(DefKind k) {
  switch (k) {
    case DefKind::Definable: return "Definable";
    case DefKind::NotDefinable: return "NotDefinable";
    case DefKind::InvalidPresentation: return "InvalidPresentation";
  }
  return "?";
}

std::vector<ValidationCertificate> validate_presentation(
    const GroupPresentation& p) {
  if (p.torus_rank < 0)
    throw InvalidPresentation("shape", "negative torus rank");
  if (static_cast<int>(p.derivations.size()) != p.torus_rank)
    throw InvalidPresentation("shape",
                              "torus rank does not match the derivation count");
  int n = p.f.dim();
  std::vector<ValidationCertificate> certs;
  for (int j = 0; j < p.torus_rank; ++j) {
    const RatMatrix& d = p.derivations[j];
    if (d.rows() != n || d.cols() != n)
      throw InvalidPresentation("shape", "derivation " + std::to_string(j) +
                                             " is not " + std::to_string(n) +
                                             "x" + std::to_string(n));
    if (!is_derivation(p.f, d))
      throw InvalidPresentation("derivation",
                                "matrix " + std::to_string(j) +
                                    " violates the Leibniz rule");
    certs.push_back({"derivation", j, "Leibniz rule holds on all basis pairs"});
  }
  for (int j = 0; j < p.torus_rank; ++j)
    for (int k = j + 1; k < p.torus_rank; ++k)
      if (p.derivations[j] * p.derivations[k] !=
          p.derivations[k] * p.derivations[j])
        throw InvalidPresentation("commutation",
                                  "derivations " + std::to_string(j) + " and " +
                                      std::to_string(k) + " do not commute");
  if (p.torus_rank > 1)
    certs.push_back({"commutation", -1, "all derivation pairs commute"});

  for (int j = 0; j < p.torus_rank; ++j) {
    const RatMatrix& d = p.derivations[j];
    Poly chi = char_poly(d);
    Poly sf = square_free_part(chi);
    if (!eval_poly(sf, d).is_zero())
      throw InvalidPresentation("semisimple",
                                "derivation " + std::to_string(j) +
                                    " is not annihilated by the square-free "
                                    "part of its characteristic polynomial");
    certs.push_back({"semisimple", j,
                     "annihilated by " + sf.str("L")});

    // chi must be L^k * q(L^2) with q real-rooted and nonpositive.
    int zero_order = 0;
    while (zero_order <= chi.degree() && chi.coeff(zero_order).is_zero())
      ++zero_order;
    RatVec rest;
    for (int t = zero_order; t <= chi.degree(); ++t)
      rest.push_back(chi.coeff(t));
    Poly r(rest);
    for (int t = 1; t <= r.degree(); t += 2)
      if (!r.coeff(t).is_zero())
        throw InvalidPresentation(
            "imaginary-spectrum",
            "derivation " + std::to_string(j) +
                " has spectrum off the imaginary axis (odd characteristic "
                "coefficients)");
    RatVec even;
    for (int t = 0; t <= r.degree(); t += 2) even.push_back(r.coeff(t));
    Poly q(even);
    // roots of q must be real and <= 0, i.e. q(-mu) real-rooted with no
    // roots below zero
    RatVec flipped = q.coeffs();
    for (size_t t = 1; t < flipped.size(); t += 2) flipped[t] = -flipped[t];
    Poly h(flipped);  // h(mu) = q(-mu)
    bool ok = h.degree() == 0 ||
              (is_real_rooted(h) &&
               real_root_count_between(h, SturmBound::minus_inf(),
                                       SturmBound::finite(Rat(0))) == 0);
    if (!ok)
      throw InvalidPresentation("imaginary-spectrum",
                                "derivation " + std::to_string(j) +
                                    " has an eigenvalue with nonzero real part");
    certs.push_back({"imaginary-spectrum", j,
                     "characteristic polynomial is L^" +
                         std::to_string(zero_order) + " * q(L^2), q = " +
                         q.str("Y") + " real-rooted and nonpositive"});
  }
  return certs;
}

DefinabilityVerdict classify_simply_connected(const LieAlgebra& g) {
  if (!g.is_solvable())
    throw InvalidPresentation("solvable",
                              "the classifier only covers solvable algebras");
  DefinabilityVerdict v;
  v.solvability = is_completely_solvable(g);
  v.kind = v.solvability.completely_solvable() ? DefKind::Definable
                                               : DefKind::NotDefinable;
  return v;
}

DefinabilityVerdict classify_group(const GroupPresentation& p) {
  std::vector<ValidationCertificate> certs = validate_presentation(p);
  DefinabilityVerdict v = classify_simply_connected(p.f);
  v.torus_certificates = std::move(certs);
  return v;
}

}  // namespace solvcert
