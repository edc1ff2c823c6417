#pragma once

#include <Eigen/Dense>
#include <vector>

#include "solvcert/exp_number.hpp"
#include "solvcert/rat_matrix.hpp"

namespace solvcert {

/// Matrix over the exponential-number ring; the exact image of an upper
/// triangular rational matrix under the matrix exponential.  Valid values
/// are upper triangular with diagonal entries of the form 1 * e^d, i.e.
/// they lie in the group of triangular matrices with positive diagonal.
class ExpMatrix {
 public:
  ExpMatrix(int rows, int cols);
  static ExpMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ExpNumber& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const ExpNumber& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  friend ExpMatrix operator*(const ExpMatrix& a, const ExpMatrix& b);
  friend bool operator==(const ExpMatrix& a, const ExpMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const ExpMatrix& a, const ExpMatrix& b) {
    return !(a == b);
  }

  bool is_upper_triangular() const;
  /// Strictly-lower entries exactly zero and every diagonal entry a single
  /// term 1 * e^d.
  bool in_positive_triangular_group() const;

  Eigen::MatrixXd to_double() const;

 private:
  int rows_, cols_;
  std::vector<ExpNumber> e_;
};

/// Exact exponential of an upper triangular rational matrix, through the
/// Jordan-Chevalley decomposition: Exp(m) = Exp(s) * Exp(nilpotent) with
/// Exp(s) assembled from Lagrange projectors at the (rational) diagonal
/// eigenvalues and Exp(nilpotent) the terminating series.
/// Throws NotTriangular on other shapes.
ExpMatrix exp_triangular_exact(const RatMatrix& m);

/// exp(t * x), exact path.
ExpMatrix one_parameter_exact(const RatMatrix& x, const Rat& t);

/// exp(t * x), floating-point path.
Eigen::MatrixXd one_parameter_numeric(const RatMatrix& x, const Rat& t);

/// Scaling-and-squaring exponential for upper triangular input.
Eigen::MatrixXd exp_triangular_numeric(const Eigen::MatrixXd& m);

/// Inverse of the exponential on triangular matrices with positive diagonal,
/// by inverse scaling and squaring with exact triangular square roots.
/// The result is certified: ||exp(result) - t||_inf <= tol.
Eigen::MatrixXd log_triangular_positive(const Eigen::MatrixXd& t,
                                        double tol = 1e-9);

/// Entrywise numeric conversion helpers for the float paths.
Eigen::MatrixXd to_double(const RatMatrix& m);
void ensure_finite(const Eigen::MatrixXd& m);

}  // namespace solvcert
