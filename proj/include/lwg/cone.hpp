#pragma once

#include "lwg/subspace.hpp"

#include <optional>

namespace lwg {

/// Closed rational polyhedral cone {X : gamma(X) <= 0} held in both
/// descriptions.  Rays are primitive integer vectors orthogonal to the
/// lineality space; facet normals are primitive and orthogonal to the
/// equations, so equal cones have equal descriptions.
class Cone {
 public:
  explicit Cone(std::size_t ambient = 0);
  static Cone from_inequalities(std::size_t ambient, const std::vector<Vec>& gammas);
  static Cone from_generators(std::size_t ambient, const std::vector<Vec>& rays,
                              const std::vector<Vec>& lineality = {});
  static Cone whole(std::size_t ambient);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return span_.dim(); }
  bool is_full_dimensional() const { return dim() == n_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const Subspace& lineality() const { return lineality_; }
  const Subspace& linear_span() const { return span_; }
  /// Minimal facet normals.
  const std::vector<Vec>& facets() const { return facets_; }
  /// Basis of the functionals vanishing on the cone.
  const std::vector<Vec>& equations() const { return equations_; }
  /// Facets followed by plus and minus each equation.
  std::vector<Vec> inequalities() const;

  bool contains(const Vec& x) const;
  bool contains(const Cone& other) const;
  /// Relative interior membership.
  bool contains_relative_interior(const Vec& x) const;
  /// Interior membership in the ambient space.
  bool contains_interior(const Vec& x) const { return is_full_dimensional() && contains_relative_interior(x); }
  /// Sum of the rays: a point of the relative interior.
  Vec interior_point() const;

  /// {lambda : lambda(X) >= 0 for all X in the cone}.
  Cone dual() const;
  std::vector<Cone> faces() const;
  /// Faces of codimension one in the ambient space.
  std::vector<Cone> walls() const;
  /// Cone intersected with its negative.
  const Subspace& edge() const { return lineality_; }

  Cone intersect(const Cone& other) const;
  /// Image under a linear map with the given number of rows.
  Cone image(const Mat& m) const;
  /// Cone plus a linear subspace.
  Cone plus(const Subspace& v) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.n_ == b.n_ && a.lineality_ == b.lineality_ && a.rays_ == b.rays_;
  }

 private:
  std::size_t n_;
  std::vector<Vec> rays_;
  Subspace lineality_;
  Subspace span_;
  std::vector<Vec> facets_, equations_;

  void finish_from_generators();
};

/// A point x with gamma(x) < 0 for every gamma, if one exists.
std::optional<Vec> strictly_negative_point(std::size_t ambient, const std::vector<Vec>& gammas);

struct Chamber {
  std::vector<int> signs;  // sign of each hyperplane functional on the chamber
  Vec point;               // rational interior point
};

struct ChamberSet {
  std::vector<Vec> hyperplanes;  // deduplicated up to sign and scale
  std::vector<Chamber> chambers;  // sorted by sign vector
};

/// Chambers of a central arrangement by reverse search from the chamber of a
/// generic seed point.
ChamberSet enumerate_chambers(std::size_t ambient, const std::vector<Vec>& hyperplanes);

/// Primitive integer multiple with positive first nonzero entry.
Vec normalize_direction(const Vec& v);

}  // namespace lwg
