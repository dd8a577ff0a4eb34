#pragma once

#include "lwg/spherical.hpp"

namespace lwg {

/// W(Sigma) with cosets modulo the parabolic subgroup of the Levi l_Q.
class CosetTable {
 public:
  CosetTable(const LieAlgebra& g, const std::vector<std::size_t>& sigma0);
  const std::vector<WeylElement>& elements() const { return elements_; }
  /// Shortlex-minimal representative of w W_J.
  const WeylElement& representative(const Mat& w_on_a) const;
  std::string label(const Mat& w_on_a) const { return word_label(representative(w_on_a).word); }
  /// Index into elements() of the element with this action on a.
  std::optional<std::size_t> find(const Mat& w_on_a) const;

 private:
  std::vector<WeylElement> elements_;
  Vec x_j_, x0_;
  std::map<std::vector<std::string>, std::size_t> coset_, element_;
};

struct WallGenerator {
  Cone wall;
  IntVec sigma;              // element of the indecomposables vanishing on the wall
  std::string witness;       // "root" or "pair"
  IntVec beta, gamma;        // the root (witness "root") or the orthogonal pair
  Vec a_h_witness;           // nonzero element of span(beta-check, gamma-check) cap a_h
  IntVec word;               // a W(Sigma) element realizing the reflection
  Mat on_a;
  Mat on_quotient;           // on a/a_h, in the a_circ basis
};

struct LittleWeylElement {
  IntVec word;  // minimal coset representative
  Mat on_a;
  Mat on_quotient;
  std::string coset_label;
};

struct TilingReport {
  bool disjoint = true;
  bool covering = true;       // arrangement certificate
  bool sample_covered = true;
  std::size_t certificate_chambers = 0;
  std::size_t samples = 0;
};

struct LittleWeylGroup {
  std::vector<Vec> quotient_basis;  // a_circ basis, a-coordinates
  std::vector<Vec> edge_quotient_basis;  // a cap a_E-perp, a-coordinates
  Subspace a_E;
  std::vector<WallGenerator> generators;
  std::vector<LittleWeylElement> elements;
  std::size_t order = 0;
  std::vector<std::vector<int>> coxeter_matrix;
  std::string coxeter_type;
  TilingReport tiling;
  std::vector<std::string> diagnostics;  // failed group checks
};

WallGenerator wall_reflection(const LieAlgebra& g, const SphericalAnalysis& an, const Cone& wall, const CosetTable& table);
LittleWeylGroup little_weyl_group(const LieAlgebra& g, const SphericalAnalysis& an, std::size_t bound = 10000,
                                  std::uint64_t seed = 1);

struct ChamberMatch {
  std::vector<int> signs;
  Vec point;
  Subspace limit;
  std::vector<std::string> cosets;  // distinct matching cosets
  std::size_t candidates = 0;       // after the profile prefilter
};

struct LimitWeyl {
  std::vector<ChamberMatch> chambers;
  std::vector<std::string> cosets;  // sorted, distinct
  std::vector<std::string> diagnostics;
};

/// Cosets w W_J with h_{z,X} = chi Ad(n_w) h_empty, over the order-regular chambers.
LimitWeyl weyl_from_limits(const LieAlgebra& g, const SphericalAnalysis& an, MLattice lattice = MLattice::Coroot);

struct SphericalRootData {
  std::vector<IntVec> lattice_basis;  // basis of Lambda in simple-root coordinates
  std::vector<IntVec> roots;          // sorted
  std::vector<std::vector<int>> coxeter_orders;
  bool lattice_preserved = true;
  bool roots_permuted = true;
  bool generates_w = true;
};

SphericalRootData spherical_roots(const LieAlgebra& g, const LittleWeylGroup& w);

/// Coxeter type label from a Coxeter matrix: "trivial", "A1", "A2", "B2", "G2",
/// "I2(m)", "A1xA1", ...
std::string coxeter_type(const std::vector<std::vector<int>>& m);

/// Order of a finite-order matrix; 0 if larger than the bound.
int matrix_order(const Mat& m, int bound = 12);

/// Z-basis of {n in Z^k : m n = 0}.
std::vector<IntVec> integer_kernel(const Mat& m);

}  // namespace lwg
