#pragma once

#include "lwg/rational.hpp"

#include <map>
#include <optional>

namespace lwg {

using IntMat = std::vector<IntVec>;

/// Cartan matrix of a finite type given as e.g. "A2", "B3", "G2", "A1xA1".
/// Convention: A[i][j] = alpha_j(h_i), Bourbaki numbering.
IntMat cartan_matrix_from_type(const std::string& type);

/// Finite root system determined by a Cartan matrix.  Roots are integer
/// vectors in simple-root coordinates.
class RootSystem {
 public:
  RootSystem() = default;
  explicit RootSystem(IntMat cartan);

  std::size_t rank() const { return cartan_.size(); }
  const IntMat& cartan() const { return cartan_; }
  /// Positive roots ordered by height, then lexicographically; simple roots first.
  const std::vector<IntVec>& positive_roots() const { return positive_; }
  /// All roots: the positive roots followed by their negatives in the same order.
  const std::vector<IntVec>& roots() const { return roots_; }
  std::optional<std::size_t> index(const IntVec& r) const;
  bool is_root(const IntVec& r) const { return index(r).has_value(); }
  std::size_t negative_of(std::size_t i) const;
  bool is_positive(std::size_t i) const { return i < positive_.size(); }

  /// (alpha_i, alpha_i) for the simple roots, normalized so the shortest is 2
  /// within each simple component.
  const Vec& simple_lengths() const { return d_; }
  Rational inner(const IntVec& a, const IntVec& b) const;
  /// beta(h_i).
  long pairing(const IntVec& beta, std::size_t i) const;
  static long height(const IntVec& r);
  /// Coefficients of the coroot of alpha in the simple coroots.
  Vec coroot(const IntVec& alpha) const;

 private:
  IntMat cartan_;
  Vec d_;
  std::vector<IntVec> positive_, roots_;
  std::map<IntVec, std::size_t> lookup_;
};

}  // namespace lwg
