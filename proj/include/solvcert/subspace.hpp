#pragma once

#include <vector>

#include "solvcert/rat_matrix.hpp"
#include "solvcert/rational.hpp"

namespace solvcert {

/// Linear subspace of Q^n, held as a canonical reduced-echelon row basis.
/// Two Subspace values are equal iff they are the same subspace, so equality
/// is plain representation equality.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim);
  static Subspace span(int ambient_dim, const std::vector<RatVec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  std::vector<RatVec> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; throws if v is outside.
  RatVec coordinates(const RatVec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  int ambient_;
  RatMatrix basis_;  // dim() x ambient_, reduced echelon, no zero rows
  std::vector<int> pivots_;
};

}  // namespace solvcert
