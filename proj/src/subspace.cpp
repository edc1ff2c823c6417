#include "solvcert/subspace.hpp"

#include "solvcert/errors.hpp"

namespace solvcert {

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = RatMatrix::identity(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(int ambient_dim, const std::vector<RatVec>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  for (const RatVec& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw DimensionError("span: vector length mismatch");
  Echelon e = rref(RatMatrix::from_rows(vectors));
  int r = static_cast<int>(e.pivots.size());
  RatMatrix b(r, ambient_dim);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ambient_dim; ++j) b.at(i, j) = e.reduced.at(i, j);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(e.pivots);
  return s;
}

bool Subspace::contains(const RatVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw DimensionError("contains: vector length mismatch");
  RatVec r = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    const Rat& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Rat f = c;
    for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

RatVec Subspace::coordinates(const RatVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw DimensionError("coordinates: vector length mismatch");
  RatVec r = v;
  RatVec coords(dim(), Rat(0));
  for (int i = 0; i < basis_.rows(); ++i) {
    Rat f = r[pivots_[i]];
    if (f.is_zero()) continue;
    coords[i] = f;
    for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  if (!is_zero(r)) throw InvalidInput("coordinates: vector not in subspace");
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("sum: ambient mismatch");
  std::vector<RatVec> rows = basis_.row_vectors();
  for (const RatVec& v : other.basis_.row_vectors()) rows.push_back(v);
  return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw DimensionError("intersect: ambient mismatch");
  int ka = dim(), kb = other.dim();
  if (ka == 0 || kb == 0) return zero(ambient_);
  // Null space of [A^T | -B^T]: pairs (u, w) with A^T u = B^T w.
  RatMatrix m(ambient_, ka + kb);
  for (int i = 0; i < ambient_; ++i) {
    for (int j = 0; j < ka; ++j) m.at(i, j) = basis_.at(j, i);
    for (int j = 0; j < kb; ++j) m.at(i, ka + j) = -other.basis_.at(j, i);
  }
  std::vector<RatVec> vecs;
  for (const RatVec& uw : kernel(m)) {
    RatVec v(ambient_, Rat(0));
    for (int j = 0; j < ka; ++j)
      for (int i = 0; i < ambient_; ++i) v[i] += uw[j] * basis_.at(j, i);
    vecs.push_back(std::move(v));
  }
  return span(ambient_, vecs);
}

}  // namespace solvcert
