#include "solvcert/lie_algebra.hpp"

#include <algorithm>

#include "solvcert/errors.hpp"

namespace solvcert {

int LieAlgebra::pair_index(int i, int j) const {
  // pairs (i, j) with i < j in lexicographic order
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names,
                       std::vector<RatVec> constants)
    : dim_(dim), names_(std::move(basis_names)), c_(std::move(constants)) {
  if (dim < 0) throw DimensionError("negative dimension");
  if (static_cast<int>(names_.size()) != dim)
    throw DimensionError("basis name count does not match dimension");
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw DimensionError("duplicate basis name '" + names_[i] + "'");
  size_t pairs = static_cast<size_t>(dim) * (dim - 1) / 2;
  if (c_.size() != pairs)
    throw DimensionError("structure constant count does not match dimension");
  for (const RatVec& v : c_)
    if (static_cast<int>(v.size()) != dim)
      throw DimensionError("structure constant vector length mismatch");
  verify_jacobi();
}

LieAlgebra LieAlgebra::abelian(int dim) {
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  std::vector<RatVec> c(static_cast<size_t>(dim) * (dim - 1) / 2,
                        RatVec(dim, Rat(0)));
  return LieAlgebra(dim, std::move(names), std::move(c));
}

RatVec LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw DimensionError("basis index out of range");
  if (i == j) return RatVec(dim_, Rat(0));
  if (i < j) return c_[pair_index(i, j)];
  return Rat(-1) * c_[pair_index(j, i)];
}

RatVec LieAlgebra::bracket(const RatVec& a, const RatVec& b) const {
  if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
    throw DimensionError("bracket operand length mismatch");
  RatVec r(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      Rat f = a[i] * b[j] - a[j] * b[i];
      if (f.is_zero()) continue;
      const RatVec& cij = c_[pair_index(i, j)];
      for (int k = 0; k < dim_; ++k) r[k] += f * cij[k];
    }
  }
  return r;
}

void LieAlgebra::verify_jacobi() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        RatVec s = bracket(basis_element(i), bracket_basis(j, k));
        s = s + bracket(basis_element(j), bracket_basis(k, i));
        s = s + bracket(basis_element(k), bracket_basis(i, j));
        if (!is_zero(s)) throw JacobiViolation(i, j, k, str(s));
      }
}

RatVec LieAlgebra::basis_element(int i) const {
  RatVec v(dim_, Rat(0));
  v[i] = Rat(1);
  return v;
}

RatMatrix LieAlgebra::ad_matrix(const RatVec& xi) const {
  RatMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    RatVec col = bracket(xi, basis_element(j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

RatMatrix LieAlgebra::ad_basis(int i) const { return ad_matrix(basis_element(i)); }

Subspace LieAlgebra::bracket_space(const Subspace& a, const Subspace& b) const {
  if (a.ambient_dim() != dim_ || b.ambient_dim() != dim_)
    throw DimensionError("bracket_space: ambient mismatch");
  std::vector<RatVec> spans;
  for (const RatVec& u : a.basis_vectors())
    for (const RatVec& v : b.basis_vectors()) spans.push_back(bracket(u, v));
  return Subspace::span(dim_, spans);
}

namespace {

// Strictly decreasing chain; a nonzero fixed point is repeated once so the
// stabilization is visible, a zero endpoint is not.
template <typename Step>
std::vector<Subspace> descending_series(const Subspace& start, int max_steps,
                                        Step step) {
  std::vector<Subspace> series{start};
  for (int s = 0; s <= max_steps; ++s) {
    Subspace next = step(series.back());
    if (next == series.back()) {
      if (next.dim() != 0) series.push_back(next);
      break;
    }
    series.push_back(next);
  }
  return series;
}

}  // namespace

std::vector<Subspace> LieAlgebra::derived_series() const {
  return descending_series(full_space(), dim_, [this](const Subspace& s) {
    return bracket_space(s, s);
  });
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  return descending_series(full_space(), dim_, [this](const Subspace& s) {
    return bracket_space(full_space(), s);
  });
}

bool LieAlgebra::is_solvable() const { return derived_series().back().dim() == 0; }

bool LieAlgebra::is_nilpotent() const {
  return lower_central_series().back().dim() == 0;
}

int LieAlgebra::nilpotency_class() const {
  auto lcs = lower_central_series();
  if (lcs.back().dim() != 0) throw InvalidInput("nilpotency class of a non-nilpotent algebra");
  return static_cast<int>(lcs.size()) - 1;
}

Subspace LieAlgebra::centralizer(const Subspace& s) const {
  if (s.ambient_dim() != dim_) throw DimensionError("centralizer: ambient mismatch");
  std::vector<RatVec> sv = s.basis_vectors();
  if (sv.empty()) return full_space();
  RatMatrix stacked(dim_ * static_cast<int>(sv.size()), dim_);
  for (size_t t = 0; t < sv.size(); ++t)
    for (int i = 0; i < dim_; ++i) {
      RatVec col = bracket(basis_element(i), sv[t]);
      for (int k = 0; k < dim_; ++k)
        stacked.at(static_cast<int>(t) * dim_ + k, i) = col[k];
    }
  return Subspace::span(dim_, kernel(stacked));
}

Subspace LieAlgebra::center() const { return centralizer(full_space()); }

bool LieAlgebra::is_ideal(const Subspace& s) const {
  return s.contains(bracket_space(full_space(), s));
}

RatMatrix LieAlgebra::killing_form() const {
  std::vector<RatMatrix> ads;
  ads.reserve(dim_);
  for (int i = 0; i < dim_; ++i) ads.push_back(ad_basis(i));
  RatMatrix k(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      Rat t = (ads[i] * ads[j]).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim())
    throw DimensionError("quotient: ambient mismatch");
  if (!g.is_ideal(ideal))
    throw NotAnIdeal("subspace is not an ideal of the algebra");
  int n = g.dim(), k = ideal.dim(), m = n - k;
  std::vector<bool> is_pivot(n, false);
  for (int p : ideal.pivots()) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  // Projection: reduce modulo the ideal's echelon basis, keep free coords.
  RatMatrix proj(m, n);
  for (int t = 0; t < n; ++t) {
    RatVec r(n, Rat(0));
    r[t] = Rat(1);
    for (int row = 0; row < k; ++row) {
      Rat f = r[ideal.pivots()[row]];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) r[j] -= f * ideal.basis().at(row, j);
    }
    for (int a = 0; a < m; ++a) proj.at(a, t) = r[free_cols[a]];
  }
  RatMatrix lift(n, m);
  for (int a = 0; a < m; ++a) lift.at(free_cols[a], a) = Rat(1);

  std::vector<std::string> names;
  for (int f : free_cols) names.push_back(g.basis_name(f));
  std::vector<RatVec> constants;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      constants.push_back(
          proj.apply(g.bracket_basis(free_cols[a], free_cols[b])));
  return QuotientResult{LieAlgebra(m, std::move(names), std::move(constants)),
                        std::move(proj), std::move(lift)};
}

bool is_derivation(const LieAlgebra& g, const RatMatrix& d) {
  if (d.rows() != g.dim() || d.cols() != g.dim())
    throw DimensionError("derivation has wrong shape");
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      RatVec lhs = d.apply(g.bracket_basis(i, j));
      RatVec rhs = g.bracket(d.col(i), g.basis_element(j)) +
                   g.bracket(g.basis_element(i), d.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebra semidirect_sum(const LieAlgebra& h,
                          const std::vector<RatMatrix>& derivations,
                          const std::vector<std::string>& new_names) {
  int nh = h.dim();
  int m = static_cast<int>(derivations.size());
  for (int j = 0; j < m; ++j) {
    const RatMatrix& d = derivations[j];
    if (d.rows() != nh || d.cols() != nh)
      throw DimensionError("derivation has wrong shape");
    for (int a = 0; a < nh; ++a)
      for (int b = a + 1; b < nh; ++b) {
        RatVec lhs = d.apply(h.bracket_basis(a, b));
        RatVec rhs = h.bracket(d.col(a), h.basis_element(b)) +
                     h.bracket(h.basis_element(a), d.col(b));
        if (lhs != rhs) throw NotADerivation(j, a, b);
      }
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      if (derivations[j] * derivations[k] != derivations[k] * derivations[j])
        throw NonCommutingDerivations(j, k);

  int n = nh + m;
  std::vector<std::string> names = h.basis_names();
  for (int j = 0; j < m; ++j)
    names.push_back(static_cast<int>(new_names.size()) > j
                        ? new_names[j]
                        : "t" + std::to_string(j + 1));
  auto pad = [&](const RatVec& v) {
    RatVec r(n, Rat(0));
    for (int i = 0; i < static_cast<int>(v.size()); ++i) r[i] = v[i];
    return r;
  };
  std::vector<RatVec> constants;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (j < nh) {
        constants.push_back(pad(h.bracket_basis(i, j)));
      } else if (i < nh) {
        // [x_i, t_j] = -D_j x_i
        constants.push_back(pad(Rat(-1) * derivations[j - nh].col(i)));
      } else {
        constants.push_back(RatVec(n, Rat(0)));
      }
    }
  return LieAlgebra(n, std::move(names), std::move(constants));
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim())
    throw DimensionError("subalgebra: ambient mismatch");
  int k = s.dim();
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("v" + std::to_string(i + 1));
  auto rows = s.basis_vectors();
  std::vector<RatVec> constants;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      RatVec w = g.bracket(rows[i], rows[j]);
      if (!s.contains(w))
        throw InvalidInput("subspace is not closed under the bracket");
      constants.push_back(s.coordinates(w));
    }
  return LieAlgebra(k, std::move(names), std::move(constants));
}

LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& new_basis) {
  if (new_basis.rows() != g.dim() || new_basis.cols() != g.dim())
    throw DimensionError("change_basis: shape mismatch");
  RatMatrix inv = inverse(new_basis);
  std::vector<RatVec> constants;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      constants.push_back(
          inv.apply(g.bracket(new_basis.col(i), new_basis.col(j))));
  return LieAlgebra(g.dim(), g.basis_names(), std::move(constants));
}

std::vector<RatMatrix> derivation_space(const LieAlgebra& g) {
  int n = g.dim();
  if (n == 0) return {};
  int pairs = n * (n - 1) / 2;
  if (pairs == 0) {
    // Abelian: every matrix is a derivation.
    std::vector<RatMatrix> all;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RatMatrix e(n, n);
        e.at(i, j) = Rat(1);
        all.push_back(e);
      }
    return all;
  }
  // Unknown D, row-major: entry (l, m) is column l*n + m.
  RatMatrix sys(pairs * n, n * n);
  int row0 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec cij = g.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        // (D c_ij)_k
        for (int m = 0; m < n; ++m) sys.at(row0 + k, k * n + m) += cij[m];
        // -[D e_i, e_j]_k - [e_i, D e_j]_k
        for (int l = 0; l < n; ++l) {
          sys.at(row0 + k, l * n + i) -= g.bracket_basis(l, j)[k];
          sys.at(row0 + k, l * n + j) -= g.bracket_basis(i, l)[k];
        }
      }
      row0 += n;
    }
  std::vector<RatMatrix> basis;
  for (const RatVec& v : kernel(sys)) {
    RatMatrix d(n, n);
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m) d.at(l, m) = v[l * n + m];
    basis.push_back(std::move(d));
  }
  return basis;
}

}  // namespace solvcert
