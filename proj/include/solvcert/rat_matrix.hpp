#pragma once

#include <string>
#include <vector>

#include "solvcert/poly.hpp"
#include "solvcert/rational.hpp"

namespace solvcert {

/// Dense matrix over the rationals, row-major storage.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);
  static RatMatrix column(const RatVec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  RatVec row(int i) const;
  RatVec col(int j) const;
  std::vector<RatVec> row_vectors() const;

  RatMatrix transpose() const;
  RatMatrix operator-() const;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  RatMatrix operator*(const Rat& s) const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) {
    return !(a == b);
  }

  RatVec apply(const RatVec& v) const;  // this * v

  Rat trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_upper_triangular() const;
  bool is_strictly_upper_triangular() const;

  RatMatrix pow(int k) const;

  std::string str() const;

 private:
  int rows_, cols_;
  RatVec e_;
};

struct Echelon {
  RatMatrix reduced;        // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form with pivot columns; fully canonical.
Echelon rref(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Canonical basis of the null space: one vector per free column f, with a 1
/// in position f and the negated reduced-echelon entries in the pivot
/// positions.  Free columns taken in ascending order.
std::vector<RatVec> kernel(const RatMatrix& m);

/// Solves m*x = b; returns the particular solution with all free variables
/// set to zero.  Throws InvalidInput when inconsistent.
RatVec solve(const RatMatrix& m, const RatVec& b);

/// Exact inverse; throws InvalidInput on singular input.
RatMatrix inverse(const RatMatrix& m);

/// Characteristic polynomial det(T*I - m), monic of degree n, by the
/// Faddeev-LeVerrier recurrence (division-free apart from exact integer
/// divisions of the trace).
Poly char_poly(const RatMatrix& m);

/// Evaluates p at a square matrix (Horner).
RatMatrix eval_poly(const Poly& p, const RatMatrix& m);

}  // namespace solvcert
