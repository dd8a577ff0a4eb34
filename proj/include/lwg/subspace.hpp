#pragma once

#include "lwg/linalg.hpp"

namespace lwg {

/// Subspace of Q^n stored in canonical reduced row echelon form, so that
/// equality of subspaces is equality of basis matrices.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(std::size_t ambient);
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& coords);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Mat basis_matrix() const { return Mat::from_rows(basis_, n_); }

  /// Residual of v after clearing the pivot coordinates with basis rows.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; throws if v is not contained.
  Vec coordinates(const Vec& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Orthogonal complement for the standard dot product.
  Subspace std_complement() const;
  /// Image under a linear map given as a square or rectangular matrix.
  Subspace image(const Mat& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lwg
