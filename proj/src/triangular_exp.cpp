#include "solvcert/triangular_exp.hpp"

#include <cmath>

#include "solvcert/errors.hpp"
#include "solvcert/jordan.hpp"
#include "solvcert/poly.hpp"

namespace solvcert {

ExpMatrix::ExpMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * cols, ExpNumber::zero());
}

ExpMatrix ExpMatrix::identity(int n) {
  ExpMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ExpNumber::one();
  return m;
}

ExpMatrix operator*(const ExpMatrix& a, const ExpMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ExpMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const ExpNumber& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
    }
  return r;
}

bool ExpMatrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < std::min(i, cols_); ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool ExpMatrix::in_positive_triangular_group() const {
  if (rows_ != cols_ || !is_upper_triangular()) return false;
  for (int i = 0; i < rows_; ++i)
    if (!at(i, i).is_unit_exponential()) return false;
  return true;
}

Eigen::MatrixXd ExpMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).to_double();
  return m;
}

Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d(i, j) = m.at(i, j).to_double();
  return d;
}

void ensure_finite(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) throw InvalidInput("matrix has non-finite entries");
}

ExpMatrix exp_triangular_exact(const RatMatrix& m) {
  if (!m.is_square()) throw NotTriangular("exponential of non-square matrix");
  if (!m.is_upper_triangular())
    throw NotTriangular("exact exponential requires an upper triangular matrix");
  int n = m.rows();
  if (n == 0) return ExpMatrix(0, 0);

  auto [s, nil] = jordan_chevalley(m);

  // Exp(nil): the series terminates.
  RatMatrix exp_n = RatMatrix::identity(n);
  RatMatrix power = RatMatrix::identity(n);
  Rat factorial(1);
  for (int k = 1; k < n; ++k) {
    power = power * nil;
    factorial *= Rat(k);
    exp_n = exp_n + power * factorial.reciprocal();
  }

  // Distinct eigenvalues are the distinct diagonal entries.
  std::vector<Rat> eigenvalues;
  for (int i = 0; i < n; ++i) {
    Rat d = m.at(i, i);
    bool seen = false;
    for (const Rat& e : eigenvalues) seen = seen || e == d;
    if (!seen) eigenvalues.push_back(d);
  }

  // Exp(s) = sum_i e^{lambda_i} * P_i(s) with Lagrange projectors P_i.
  ExpMatrix result(n, n);
  for (const Rat& lambda : eigenvalues) {
    RatMatrix proj = RatMatrix::identity(n);
    for (const Rat& mu : eigenvalues) {
      if (mu == lambda) continue;
      RatMatrix shifted = s;
      for (int i = 0; i < n; ++i) shifted.at(i, i) -= mu;
      proj = proj * shifted * (lambda - mu).reciprocal();
    }
    RatMatrix block = proj * exp_n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!block.at(i, j).is_zero())
          result.at(i, j) =
              result.at(i, j) + ExpNumber::term(block.at(i, j), lambda);
  }
  if (!result.in_positive_triangular_group())
    throw Error("exact exponential left the positive triangular group");
  return result;
}

ExpMatrix one_parameter_exact(const RatMatrix& x, const Rat& t) {
  return exp_triangular_exact(x * t);
}

Eigen::MatrixXd one_parameter_numeric(const RatMatrix& x, const Rat& t) {
  return exp_triangular_numeric(to_double(x * t));
}

Eigen::MatrixXd exp_triangular_numeric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw NotTriangular("exponential of non-square matrix");
  ensure_finite(m);
  int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != 0.0)
        throw NotTriangular("numeric exponential requires an upper triangular matrix");
  double norm = m.lpNorm<Eigen::Infinity>();
  int s = 0;
  while (norm > 0.25 && s < 64) {
    norm /= 2.0;
    ++s;
  }
  Eigen::MatrixXd a = m / std::pow(2.0, s);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double factorial = 1.0;
  for (int k = 1; k <= 20; ++k) {
    power = power * a;
    factorial *= k;
    acc += power / factorial;
  }
  for (int k = 0; k < s; ++k) acc = acc * acc;
  return acc;
}

namespace {

Eigen::MatrixXd sqrt_triangular(const Eigen::MatrixXd& t) {
  int n = static_cast<int>(t.rows());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = std::sqrt(t(i, i));
  for (int d = 1; d < n; ++d)
    for (int i = 0; i + d < n; ++i) {
      int j = i + d;
      double acc = t(i, j);
      for (int k = i + 1; k < j; ++k) acc -= r(i, k) * r(k, j);
      r(i, j) = acc / (r(i, i) + r(j, j));
    }
  return r;
}

}  // namespace

Eigen::MatrixXd log_triangular_positive(const Eigen::MatrixXd& t, double tol) {
  if (t.rows() != t.cols()) throw NotTriangular("log of non-square matrix");
  ensure_finite(t);
  int n = static_cast<int>(t.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (t(i, j) != 0.0)
        throw NotTriangular("log requires an upper triangular matrix");
  for (int i = 0; i < n; ++i)
    if (!(t(i, i) > 0.0))
      throw NonPositiveDiagonal("log requires positive diagonal entries");
  if (n == 0) return t;

  // Inverse scaling and squaring with exact triangular square roots.
  Eigen::MatrixXd a = t;
  int s = 0;
  while ((a - Eigen::MatrixXd::Identity(n, n)).lpNorm<Eigen::Infinity>() > 0.25 &&
         s < 80) {
    a = sqrt_triangular(a);
    ++s;
  }
  Eigen::MatrixXd b = a - Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    power = power * b;
    x += power * (k % 2 == 1 ? 1.0 : -1.0) / k;
  }
  x *= std::pow(2.0, s);

  double residual = (exp_triangular_numeric(x) - t).lpNorm<Eigen::Infinity>();
  if (!(residual <= tol))
    throw Error("log residual " + std::to_string(residual) +
                " exceeds tolerance " + std::to_string(tol));
  return x;
}

}  // namespace solvcert
