#pragma once

#include "lwg/lie_algebra.hpp"

namespace lwg {

/// Eigen-decomposition of ad(X) for X in a.  ad(X) is diagonal in the
/// Chevalley basis, so the projections p_i are coordinate projections.
struct GradedDirection {
  Vec x;                                          // a-coordinates
  Vec eigenvalues;                                // sorted, distinct
  std::vector<std::vector<std::size_t>> blocks;   // basis indices per eigenvalue

  static GradedDirection of(const LieAlgebra& g, const Vec& x_a);
  Mat projection(std::size_t i, std::size_t dim) const;
};

/// lim_{t -> infinity} Ad(exp tX) E in the Grassmannian, via
/// E_X = sum_i p_i(E cap (V_1 + ... + V_i)).
Subspace limit_subspace(const LieAlgebra& g, const Subspace& e, const Vec& x_a);

/// alpha(X) != beta(X) for all distinct roots alpha, beta.
bool is_order_regular(const LieAlgebra& g, const Vec& x_a);
/// Pairwise differences of distinct roots, deduplicated up to sign and scale,
/// as root-lattice vectors.
std::vector<IntVec> order_regular_hyperplanes(const LieAlgebra& g);

struct FlowReport {
  double distance = 0;  // sine of the largest principal angle
  bool converged = true;
  double worst_rate = 0;
  std::vector<std::vector<double>> frame;  // orthonormal rows
};

/// Floating-point flow of an orthonormal frame of E under Ad(exp tX), with
/// re-orthonormalization, compared against the exact limit.  Working
/// precision grows with the eigenvalue spread so that cancellations inside E
/// survive the flow.
FlowReport float_flow_oracle(const LieAlgebra& g, const Subspace& e, const Vec& x_a, double t_max, double tol);

/// sin of the largest principal angle between two subspaces (double precision).
double principal_angle_distance(const Subspace& a, const std::vector<std::vector<double>>& frame);

}  // namespace lwg
