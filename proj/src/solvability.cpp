#include "solvcert/solvability.hpp"

#include <algorithm>
#include <cmath>

#include "solvcert/errors.hpp"
#include "solvcert/rng.hpp"

namespace solvcert {

std::string to_string(SolvKind k) {
  switch (k) {
    case SolvKind::NotSolvable: return "NotSolvable";
    case SolvKind::SolvableNotCompletely: return "SolvableNotCompletely";
    case SolvKind::CompletelySolvable: return "CompletelySolvable";
  }
  return "?";
}

WeightReport weight_report(const LieAlgebra& g) {
  WeightReport report;
  report.all_real_rooted = true;
  for (int i = 0; i < g.dim(); ++i) {
    Poly chi = char_poly(g.ad_basis(i));
    Poly sf = square_free_part(chi);
    int count = sf.degree() == 0 ? 0 : real_root_count(sf);
    bool rr = count == sf.degree();
    report.rows.push_back({i, g.basis_name(i), chi, sf, count, rr});
    report.all_real_rooted = report.all_real_rooted && rr;
  }
  return report;
}

SolvabilityVerdict is_completely_solvable(const LieAlgebra& g) {
  auto ds = g.derived_series();
  if (ds.back().dim() != 0)
    return {SolvKind::NotSolvable, ds.back(), std::nullopt};
  WeightReport report = weight_report(g);
  for (const WeightReportRow& row : report.rows) {
    if (row.real_rooted) continue;
    NonRealWitness w{row.basis_index,
                     row.basis_name,
                     row.characteristic,
                     row.square_free,
                     strip_rational_roots(row.square_free),
                     row.distinct_real_roots,
                     row.square_free.degree() - row.distinct_real_roots};
    return {SolvKind::SolvableNotCompletely, std::nullopt, std::move(w)};
  }
  return {SolvKind::CompletelySolvable, std::nullopt, std::nullopt};
}

SampledCheck sampled_eigenvalue_check(const LieAlgebra& g, int samples,
                                      std::uint64_t seed) {
  if (!g.is_solvable())
    throw InvalidInput("sampled eigenvalue check requires a solvable algebra");
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    RatVec xi(g.dim());
    for (int i = 0; i < g.dim(); ++i) xi[i] = rng.rational(10, 7);
    Poly chi = char_poly(g.ad_matrix(xi));
    if (!is_real_rooted(chi))
      return {false, samples, seed, std::move(xi), std::move(chi)};
  }
  return {true, samples, seed, std::nullopt, std::nullopt};
}

namespace {

std::vector<std::string> poly_strings(const Poly& p) {
  std::vector<std::string> out;
  for (const Rat& c : p.coeffs()) out.push_back(c.str());
  return out;
}

// One-dimensional ideal of q with rational data.  Strategy: the derived
// algebra D is nilpotent, so its centralizer C is a nonzero ideal on which
// the adjoint operators of q commute pairwise; a common eigenvector spans an
// ideal.  Eigenvalues are scanned in ascending (denominator, numerator)
// order, and the first echelon basis vector of the final common eigenspace
// wins, so the output is canonical.
RatVec find_one_dim_ideal_exact(const LieAlgebra& q) {
  Subspace derived = q.bracket_space(q.full_space(), q.full_space());
  Subspace common = q.centralizer(derived);
  if (common.dim() == 0)
    throw InvalidInput("no one-dimensional ideal: centralizer of the derived "
                       "algebra is zero (input not solvable)");
  for (int i = 0; i < q.dim(); ++i) {
    RatMatrix a = q.ad_basis(i);
    // Restriction of a to the invariant subspace `common`.
    auto rows = common.basis_vectors();
    int k = common.dim();
    RatMatrix r(k, k);
    for (int j = 0; j < k; ++j) {
      RatVec coords = common.coordinates(a.apply(rows[j]));
      for (int l = 0; l < k; ++l) r.at(l, j) = coords[l];
    }
    Poly chi = char_poly(r);
    auto eigenvalues = rational_roots(chi);
    if (eigenvalues.empty()) throw NeedsIrrationalEigenvalue(poly_strings(chi));
    RatMatrix shifted = r;
    for (int d = 0; d < k; ++d) shifted.at(d, d) -= eigenvalues[0];
    std::vector<RatVec> eigvecs;
    for (const RatVec& u : kernel(shifted)) {
      RatVec v(q.dim(), Rat(0));
      for (int l = 0; l < k; ++l)
        for (int t = 0; t < q.dim(); ++t) v[t] += u[l] * rows[l][t];
      eigvecs.push_back(std::move(v));
    }
    common = Subspace::span(q.dim(), eigvecs);
  }
  return common.basis().row(0);
}

struct NumericAlgebra {
  int n;
  std::vector<std::vector<Eigen::VectorXd>> table;  // [i][j] = [e_i, e_j]

  explicit NumericAlgebra(int dim) : n(dim) {
    table.assign(n, std::vector<Eigen::VectorXd>(n, Eigen::VectorXd::Zero(n)));
  }

  explicit NumericAlgebra(const LieAlgebra& g) : NumericAlgebra(g.dim()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RatVec b = g.bracket_basis(i, j);
        Eigen::VectorXd v(n);
        for (int k = 0; k < n; ++k) v[k] = b[k].to_double();
        table[i][j] = v;
      }
  }

  Eigen::VectorXd bracket(const Eigen::VectorXd& a,
                          const Eigen::VectorXd& b) const {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double f = a[i] * b[j];
        if (f != 0.0) r += f * table[i][j];
      }
    return r;
  }
};

constexpr double kSingularTol = 1e-9;
constexpr double kImagTol = 1e-4;
constexpr double kClusterTol = 1e-5;

// Orthonormal basis of the column span, rank decided by singular values.
Eigen::MatrixXd column_span(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > std::max(kSingularTol * smax, 1e-12)) ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of the null space of m (columns).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > std::max(kSingularTol * smax, 1e-12)) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

// Smallest real eigenvalue estimate: eigenvalues with small imaginary part
// are clustered by real part and the cluster means are used, which averages
// out the symmetric error clouds around defective eigenvalues.
double smallest_real_eigenvalue(const Eigen::MatrixXd& r) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(r);
  std::vector<double> reals;
  for (int i = 0; i < r.rows(); ++i) {
    std::complex<double> ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) <= kImagTol * (1.0 + std::abs(ev)))
      reals.push_back(ev.real());
  }
  if (reals.empty())
    throw Error("numeric flag: no real eigenvalue at this level");
  std::sort(reals.begin(), reals.end());
  double best = 0.0;
  bool have = false;
  size_t i = 0;
  while (i < reals.size()) {
    size_t j = i;
    double sum = 0.0;
    while (j < reals.size() &&
           reals[j] - reals[i] <= kClusterTol * (1.0 + std::abs(reals[i]))) {
      sum += reals[j];
      ++j;
    }
    double mean = sum / static_cast<double>(j - i);
    if (!have || mean < best) {
      best = mean;
      have = true;
    }
    i = j;
  }
  return best;
}

// Direction of a one-dimensional ideal of the numeric algebra.
Eigen::VectorXd find_one_dim_ideal_numeric(const NumericAlgebra& q) {
  int n = q.n;
  Eigen::MatrixXd brackets(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) brackets.col(i * n + j) = q.table[i][j];
  Eigen::MatrixXd derived = column_span(brackets);

  Eigen::MatrixXd common;
  if (derived.cols() == 0) {
    common = Eigen::MatrixXd::Identity(n, n);
  } else {
    Eigen::MatrixXd stacked(n * derived.cols(), n);
    for (int t = 0; t < derived.cols(); ++t) {
      Eigen::VectorXd s = derived.col(t);
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
        ei[i] = 1.0;
        stacked.block(t * n, i, n, 1) = q.bracket(ei, s);
      }
    }
    common = null_space(stacked);
  }

  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd a(n, n);
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
    ei[i] = 1.0;
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd ej = Eigen::VectorXd::Zero(n);
      ej[j] = 1.0;
      a.col(j) = q.bracket(ei, ej);
    }
    Eigen::MatrixXd r = common.transpose() * a * common;
    double lambda = smallest_real_eigenvalue(r);
    Eigen::MatrixXd shifted =
        r - lambda * Eigen::MatrixXd::Identity(r.rows(), r.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    int keep = 0;
    for (int t = 0; t < svd.singularValues().size(); ++t)
      if (svd.singularValues()(t) <= std::max(1e-7 * smax, 1e-10)) ++keep;
    if (keep == 0) keep = 1;  // smallest singular vector always qualifies
    Eigen::MatrixXd e = svd.matrixV().rightCols(keep);
    common = column_span(common * e);
  }
  return common.col(0);
}

Eigen::MatrixXd orthonormal_complement(const Eigen::MatrixXd& rows, int n) {
  if (rows.rows() == 0) return Eigen::MatrixXd::Identity(n, n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(rows.transpose());
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(n - rows.rows());
}

}  // namespace

double numeric_flag_residual(const LieAlgebra& g,
                             const std::vector<Eigen::MatrixXd>& members) {
  NumericAlgebra num(g);
  double worst = 0.0;
  for (const Eigen::MatrixXd& b : members) {
    for (int i = 0; i < g.dim(); ++i) {
      Eigen::VectorXd ei = Eigen::VectorXd::Zero(g.dim());
      ei[i] = 1.0;
      for (int r = 0; r < b.rows(); ++r) {
        Eigen::VectorXd w = num.bracket(ei, b.row(r).transpose());
        Eigen::VectorXd res = w - b.transpose() * (b * w);
        worst = std::max(worst, res.lpNorm<Eigen::Infinity>());
      }
    }
  }
  return worst;
}

FlagSearchOutcome exact_flag_search(const LieAlgebra& g) {
  if (!g.is_solvable())
    throw InvalidInput("flag search requires a solvable algebra");
  int n = g.dim();
  std::vector<Subspace> exact{Subspace::zero(n)};
  while (exact.back().dim() < n) {
    QuotientResult q = quotient(g, exact.back());
    try {
      RatVec v = find_one_dim_ideal_exact(q.algebra);
      RatVec lifted = q.lift.apply(v);
      exact.push_back(exact.back().sum(Subspace::span(n, {lifted})));
    } catch (const NeedsIrrationalEigenvalue& e) {
      RatVec coeffs;
      for (const std::string& s : e.poly_coeffs) coeffs.push_back(Rat::parse(s));
      return {std::nullopt, Poly(std::move(coeffs))};
    }
  }
  return {Flag{FlagMode::Exact, std::move(exact), {}, 0.0, 0.0}, std::nullopt};
}

Flag complete_flag(const LieAlgebra& g, FlagMode mode, double tol) {
  SolvabilityVerdict verdict = is_completely_solvable(g);
  if (!verdict.completely_solvable())
    throw NotCompletelySolvable("complete flag requires a completely solvable algebra, got " +
                                to_string(verdict.kind));
  int n = g.dim();

  // Exact chain, as far as rational eigenvalues reach.
  std::vector<Subspace> exact{Subspace::zero(n)};
  bool exact_complete = true;
  while (exact.back().dim() < n) {
    QuotientResult q = quotient(g, exact.back());
    try {
      RatVec v = find_one_dim_ideal_exact(q.algebra);
      RatVec lifted = q.lift.apply(v);
      exact.push_back(exact.back().sum(Subspace::span(n, {lifted})));
    } catch (const NeedsIrrationalEigenvalue&) {
      if (mode == FlagMode::Exact) throw;
      exact_complete = false;
      break;
    }
  }

  if (mode == FlagMode::Exact) {
    Flag flag{FlagMode::Exact, std::move(exact), {}, 0.0, 0.0};
    return flag;
  }

  // Numeric mode: reuse the exact prefix, continue in floating point.
  std::vector<Eigen::MatrixXd> members;
  for (const Subspace& s : exact) {
    Eigen::MatrixXd rows(s.dim(), n);
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < n; ++j) rows(i, j) = s.basis().at(i, j).to_double();
    Eigen::MatrixXd q = column_span(rows.transpose());
    members.push_back(q.transpose());
  }
  NumericAlgebra num(g);
  while (!exact_complete &&
         static_cast<int>(members.back().rows()) < n) {
    const Eigen::MatrixXd& ideal = members.back();
    Eigen::MatrixXd comp = orthonormal_complement(ideal, n);  // n x m
    int m = static_cast<int>(comp.cols());
    NumericAlgebra quo(m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        quo.table[a][b] =
            comp.transpose() * num.bracket(comp.col(a), comp.col(b));
    Eigen::VectorXd v = find_one_dim_ideal_numeric(quo);
    Eigen::VectorXd lifted = comp * v;
    Eigen::MatrixXd next(ideal.rows() + 1, n);
    next.topRows(ideal.rows()) = ideal;
    next.row(ideal.rows()) = lifted.transpose();
    members.push_back(column_span(next.transpose()).transpose());
  }

  Flag flag;
  flag.mode = FlagMode::Numeric;
  flag.numeric = std::move(members);
  flag.tolerance = tol;
  flag.max_residual = numeric_flag_residual(g, flag.numeric);
  if (static_cast<int>(flag.numeric.size()) != n + 1)
    throw Error("numeric flag construction lost a level");
  for (int i = 0; i <= n; ++i)
    if (static_cast<int>(flag.numeric[i].rows()) != i)
      throw Error("numeric flag has a wrong-dimensional member");
  if (flag.max_residual > tol)
    throw Error("numeric flag residual " + std::to_string(flag.max_residual) +
                " exceeds tolerance " + std::to_string(tol));
  return flag;
}

bool verify_exact_flag(const LieAlgebra& g, const Flag& flag) {
  if (flag.mode != FlagMode::Exact) return false;
  int n = g.dim();
  if (static_cast<int>(flag.exact.size()) != n + 1) return false;
  for (int i = 0; i <= n; ++i) {
    if (flag.exact[i].dim() != i) return false;
    if (i > 0 && !flag.exact[i].contains(flag.exact[i - 1])) return false;
    if (!g.is_ideal(flag.exact[i])) return false;
  }
  return true;
}

Subspace nilradical_completely_solvable(const LieAlgebra& g) {
  SolvabilityVerdict verdict = is_completely_solvable(g);
  if (!verdict.completely_solvable())
    throw NotCompletelySolvable(
        "Killing-radical nilradical is only valid for completely solvable "
        "algebras, got " + to_string(verdict.kind));
  return Subspace::span(g.dim(), kernel(g.killing_form()));
}

}  // namespace solvcert
