#pragma once

#include "lwg/cone.hpp"
#include "lwg/group_elements.hpp"

#include <cstdint>

namespace lwg {

/// One factor of a group element acting on the reference subalgebra.
struct WordEntry {
  enum class Kind { Nilpotent, Torus, Weyl };
  Kind kind = Kind::Nilpotent;
  Vec data;    // Lie algebra vector (nilpotent) or simple-root character values (torus)
  IntVec word; // 0-based simple reflections (Weyl)

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

/// z = g_1 g_2 ... g_k . z0, so h_z = Ad(g_1) ... Ad(g_k) h.
struct BasePoint {
  std::vector<WordEntry> word;
  Subspace h_z;
};

Mat word_entry_action(const LieAlgebra& g, const WordEntry& e);
BasePoint translate(const LieAlgebra& g, const Subspace& h, const std::vector<WordEntry>& word);

/// Parabolic data recovered from a point with an open P-orbit.
struct QData {
  Subspace v;                       // a cap h_z-perp, a-coordinates
  std::vector<std::size_t> sigma0;  // positive roots vanishing on v (root indices)
  std::vector<std::size_t> sigmaQ;  // remaining positive roots
  Vec positive_point;               // X in v with alpha(X) > 0 on sigmaQ
  Subspace l_Q, l_nc, n_Q, nbar_Q;
};

struct AdaptedReport {
  bool adapted = false;
  std::string reason;  // empty, "no_open_P_orbit", "positivity_infeasible", "levi_not_in_h"
  std::optional<QData> q;
  std::vector<std::string> diagnostics;  // failed cross-checks
};

bool has_open_P_orbit(const LieAlgebra& g, const Subspace& h_z);
/// Recovers Q; fails with a reason code when positivity is infeasible or the
/// noncompact Levi part is not contained in h_z.
std::optional<QData> recover_Q(const LieAlgebra& g, const Subspace& h_z, std::string* reason = nullptr);
AdaptedReport check_adapted(const LieAlgebra& g, const Subspace& h_z);
bool is_adapted(const LieAlgebra& g, const Subspace& h_z);

class NotAdapted : public std::runtime_error {
 public:
  NotAdapted(const std::string& reason) : std::runtime_error("not adapted: " + reason), reason_(reason) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

struct Support {
  IntVec alpha;               // alpha in sigma(Q); the support is that of g_{-alpha}
  std::vector<IntVec> roots;  // beta with p_beta T(g_{-alpha}) != 0
  bool a = false;             // a-component nonzero
};

struct SphericalAnalysis {
  Subspace h_z;
  QData q;
  Subspace a_h;       // a cap h_z, a-coordinates
  Subspace a_circ;    // a cap a_h-perp, a-coordinates
  Subspace l_cap_h;
  std::vector<IntVec> sigmaQ_roots;  // root vectors of sigma(Q), in order
  std::vector<Vec> T;      // T(f_alpha) for alpha in sigmaQ_roots, in g-coordinates
  std::vector<Vec> Tperp;  // T-perp of the a_circ basis vectors, in g-coordinates
  std::vector<Support> supports;
  std::vector<IntVec> S_z;  // sorted
  std::vector<IntVec> indecomposables;
  Subspace h_empty;
};

/// Throws NotAdapted if h_z is not adapted.
SphericalAnalysis analyze(const LieAlgebra& g, const Subspace& h_z);

/// T_z applied to Y in nbar_Q.
Vec apply_T(const LieAlgebra& g, const SphericalAnalysis& an, const Vec& y);
/// T_z-perp applied to X in a_circ (a-coordinates).
Vec apply_Tperp(const LieAlgebra& g, const SphericalAnalysis& an, const Vec& x_a);

/// Whether v is a sum of generators (all nonnegative integer vectors).
bool in_monoid(const IntVec& v, const std::vector<IntVec>& generators);

/// Closure of C_z = {X : gamma(X) < 0 for gamma in S_z}, on a-coordinates.
Cone compression_cone(const LieAlgebra& g, const SphericalAnalysis& an);

/// Whether X in a_circ has alpha(X) != 0 for every alpha in sigma(Q).
bool in_a_circ_reg(const LieAlgebra& g, const SphericalAnalysis& an, const Vec& x_a);
/// Phi_z(X) in n_Q with Ad(exp(-Phi(X))) X = X + T-perp(X).
Vec phi(const LieAlgebra& g, const SphericalAnalysis& an, const Vec& x_a);

struct DegenerationData {
  Cone face;
  std::vector<IntVec> monoid_generators;
  Subspace h_zF;
};

DegenerationData boundary_degeneration(const LieAlgebra& g, const SphericalAnalysis& an, const Cone& face);

/// Point in the relative interior of a face, generic along its lineality space.
Vec face_interior_point(const Cone& face);

struct ChamberLimit {
  std::vector<int> signs;
  Vec point;
  Subspace limit;
  std::size_t a_dim = 0;  // dim(limit cap a)
  bool ok = false;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<ChamberLimit> chambers;
};

ChamberSet order_regular_chambers(const LieAlgebra& g);
AdmissibilityReport admissibility(const LieAlgebra& g, const SphericalAnalysis& an);

struct NtResult {
  bool constant_family = false;  // no alpha with a in the support: n_t is trivial
  bool success = false;
  long t = 0;
  IntVec alpha;
  Vec x;                 // element of ker(alpha) cap a_circ used, a-coordinates
  Vec u, c;              // U_alpha and C_alpha
  BasePoint point;
};

/// The n_t family for a compression cone that is an open half-space.
NtResult nt_fallback(const LieAlgebra& g, const BasePoint& z, long max_t);

struct FindResult {
  bool found = false;
  std::string method;  // "input", "sample", "n_t"
  std::size_t samples = 0;
  BasePoint point;
  AdmissibilityReport report;
};

FindResult find_admissible(const LieAlgebra& g, const BasePoint& z, std::uint64_t seed, std::size_t max_iters,
                           bool allow_nt = true);

/// Closure of C_z' = {X : lim Ad(exp tX) h_z' = h_empty up to M}, from the
/// matching order-regular chambers.
struct LimitCone {
  Cone cone;
  std::vector<std::vector<int>> matching;  // sign vectors of matching chambers
};
LimitCone cone_by_limits(const LieAlgebra& g, const Subspace& h_zprime, const Subspace& h_empty,
                         MLattice lattice = MLattice::Coroot);

}  // namespace lwg
