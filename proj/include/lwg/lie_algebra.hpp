#pragma once

#include "lwg/linalg.hpp"
#include "lwg/root_system.hpp"
#include "lwg/subspace.hpp"

namespace lwg {

enum class BasisKind { NegativeRoot, Cartan, Center, PositiveRoot };

struct BasisTag {
  BasisKind kind;
  std::size_t index;  // root index (into RootSystem::roots) or Cartan/center index
  std::string label;
};

/// Split real reductive Lie algebra: a Chevalley basis of the split semisimple
/// algebra with Cartan matrix A, plus an abelian center.
///
/// Basis order: f_alpha for the positive roots in reverse order, then
/// h_1..h_r, z_1..z_c, then e_alpha for the positive roots in order.  The
/// split Cartan subalgebra a is spanned by the h_i and z_k; "a-coordinates"
/// are coefficients with respect to (h_1..h_r, z_1..z_c).
class LieAlgebra {
 public:
  LieAlgebra(IntMat cartan, std::size_t center_dim);
  static LieAlgebra from_type(const std::string& type, std::size_t center_dim = 0);

  std::size_t dim() const { return tags_.size(); }
  std::size_t rank() const { return roots_.rank(); }
  std::size_t center_dim() const { return center_; }
  std::size_t a_dim() const { return rank() + center_; }
  const RootSystem& root_system() const { return roots_; }
  const IntMat& cartan() const { return roots_.cartan(); }
  const std::vector<BasisTag>& tags() const { return tags_; }
  std::vector<std::string> labels() const;

  /// Basis index of the root vector for root index k (e_alpha or f_alpha).
  std::size_t root_vector(std::size_t k) const { return root_pos_.at(k); }
  std::size_t root_vector(const IntVec& root) const;
  std::size_t cartan_position(std::size_t i) const { return npos_ + i; }
  /// Root index of basis vector b, or nullopt for Cartan/center vectors.
  std::optional<std::size_t> weight_of(std::size_t b) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  Mat ad(const Vec& x) const;
  Rational form(const Vec& x, const Vec& y) const;
  const Mat& form_matrix() const { return form_; }
  const Mat& theta_matrix() const { return theta_; }
  Vec theta(const Vec& x) const { return theta_ * x; }
  /// Structure constants: [b_i, b_j] = sum of (k, c) over table(i, j).
  const std::vector<std::pair<std::size_t, Rational>>& table(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }

  /// {X : B(X, E) = 0}.
  Subspace orthocomplement(const Subspace& e) const;
  /// Z_g(V) for V given in a-coordinates: a plus root spaces of roots vanishing on V.
  Subspace centralizer(const Subspace& v_in_a) const;
  /// Root spaces whose roots lie in the given index set.
  Subspace root_span(const std::vector<std::size_t>& root_indices) const;

  /// Evaluation vector of a root-lattice element on a-coordinates.
  Vec functional(const IntVec& lattice_vector) const;
  Rational evaluate(const IntVec& lattice_vector, const Vec& x_a) const;
  /// Eigenvalue of ad(X) on each basis vector, X in a-coordinates.
  Vec ad_eigenvalues(const Vec& x_a) const;

  Vec embed_a(const Vec& x_a) const;
  Vec project_a(const Vec& x) const;
  /// The subspace a, in a-coordinates of g turned into g-coordinates.
  Subspace a() const;
  Subspace n() const;
  Subspace nbar() const;
  /// Minimal parabolic p = m + a + n (m = 0 for split forms).
  Subspace p() const;
  /// Subspace of a, in a-coordinates, spanned by the a-components of E's vectors
  /// lying in a.
  Subspace a_part(const Subspace& e) const;
  /// Coordinates of an a-subspace of g, returned in a-coordinates.
  Subspace to_a_coords(const Subspace& e) const;
  Subspace from_a_coords(const Subspace& v) const;
  /// Gram matrix of B restricted to a (a-coordinates).
  Mat form_on_a() const;
  Vec cartan_coroot(const IntVec& alpha) const;  // alpha-check in a-coordinates

  /// Whether bracket(E, E) is contained in E.
  bool is_subalgebra(const Subspace& e) const;
  /// {X in a : [X, E] subset E}, in a-coordinates.
  Subspace normalizer_in_a(const Subspace& e) const;

  std::string describe(const Vec& x) const;

 private:
  RootSystem roots_;
  std::size_t center_;
  std::size_t npos_;  // number of positive roots
  std::vector<BasisTag> tags_;
  std::vector<std::size_t> root_pos_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
  Mat form_, theta_;

  void build_structure_constants();
};

}  // namespace lwg
