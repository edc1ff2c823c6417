#include "solvcert/rat_matrix.hpp"

#include <sstream>

#include "solvcert/errors.hpp"

namespace solvcert {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix(0, 0);
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_)
      throw DimensionError("ragged rows");
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::column(const RatVec& v) {
  RatMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

RatVec RatMatrix::row(int i) const {
  RatVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RatVec RatMatrix::col(int j) const {
  RatVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<RatVec> RatMatrix::row_vectors() const {
  std::vector<RatVec> rows;
  rows.reserve(rows_);
  for (int i = 0; i < rows_; ++i) rows.push_back(row(i));
  return rows;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
  return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix sum shape mismatch");
  RatMatrix r(a.rows_, a.cols_);
  for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + (-b); }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = s * e_[k];
  return r;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionError("matrix-vector shape mismatch");
  RatVec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat acc(0);
    for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

Rat RatMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Rat t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatMatrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < std::min(i, cols_); ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool RatMatrix::is_strictly_upper_triangular() const {
  if (!is_upper_triangular()) return false;
  for (int i = 0; i < std::min(rows_, cols_); ++i)
    if (!at(i, i).is_zero()) return false;
  return true;
}

RatMatrix RatMatrix::pow(int k) const {
  if (!is_square()) throw DimensionError("power of non-square matrix");
  if (k < 0) throw InvalidInput("negative matrix power");
  RatMatrix acc = identity(rows_);
  RatMatrix base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

Echelon rref(const RatMatrix& m) {
  Echelon e{m, {}};
  RatMatrix& a = e.reduced;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Rat inv = a.at(r, c).reciprocal();
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rat f = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

int rank(const RatMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<RatVec> kernel(const RatMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols(), Rat(0));
    v[f] = Rat(1);
    for (size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.reduced.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec solve(const RatMatrix& m, const RatVec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw DimensionError("solve: rhs length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  RatVec x(m.cols(), Rat(0));
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols())
      throw InvalidInput("solve: inconsistent linear system");
    x[e.pivots[r]] = e.reduced.at(static_cast<int>(r), m.cols());
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  Echelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) != n || e.pivots[n - 1] != n - 1)
    throw InvalidInput("inverse of singular matrix");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
  return inv;
}

Poly char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("char_poly of non-square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M*(M_k + c_k*I).
  RatVec coeffs(n + 1);
  coeffs[n] = Rat(1);
  RatMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Rat ck = -(mk.trace() / Rat(k));
    coeffs[n - k] = ck;
    if (k < n) {
      RatMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
      mk = m * shifted;
    }
  }
  return Poly(std::move(coeffs));
}

RatMatrix eval_poly(const Poly& p, const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("polynomial of non-square matrix");
  int n = m.rows();
  RatMatrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    Rat c = p.coeff(k);
    for (int i = 0; i < n; ++i) acc.at(i, i) += c;
  }
  return acc;
}

}  // namespace solvcert
