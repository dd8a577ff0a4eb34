#pragma once

#include "lwg/space.hpp"
#include "lwg/verify.hpp"
#include "lwg/weyl.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = lwg::to_string(q); }
  static void from_json(const json& j, mpq_class& q) { q = lwg::parse_rational(j.get<std::string>()); }
};

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v)
      j = *v;
    else
      j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null())
      v.reset();
    else
      v = j.get<T>();
  }
};

}  // namespace nlohmann

namespace lwg {

struct ReportSpace {
  std::string name, cartan_type;
  IntMat cartan_matrix;
  std::size_t center_dim = 0, dim = 0;
  std::vector<std::string> basis;
  std::vector<Vec> subalgebra;  // h_z rows after the base-point word
  std::string note;
  friend bool operator==(const ReportSpace&, const ReportSpace&) = default;
};

struct ReportAdaptedness {
  bool adapted = false;
  bool open_P_orbit = false;
  std::string reason;
  std::vector<std::string> diagnostics;
  friend bool operator==(const ReportAdaptedness&, const ReportAdaptedness&) = default;
};

struct ReportQ {
  std::vector<IntVec> sigma0, sigmaQ;  // positive roots, simple-root coordinates
  std::size_t l_Q_dim = 0, l_nc_dim = 0, n_Q_dim = 0;
  Vec positive_point;
  friend bool operator==(const ReportQ&, const ReportQ&) = default;
};

struct ReportSupport {
  IntVec alpha;
  Vec T;  // T_z(f_alpha), g-coordinates
  std::vector<IntVec> roots;
  bool a = false;
  friend bool operator==(const ReportSupport&, const ReportSupport&) = default;
};

struct ReportT {
  std::vector<ReportSupport> supports;
  std::vector<IntVec> S_z, indecomposables;
  std::vector<Vec> a_h;  // a-coordinates
  std::size_t h_empty_dim = 0;
  friend bool operator==(const ReportT&, const ReportT&) = default;
};

struct ReportWall {
  Vec normal;
  std::vector<Vec> rays, lineality;
  friend bool operator==(const ReportWall&, const ReportWall&) = default;
};

struct ReportCone {
  bool whole = false;
  std::vector<Vec> inequalities;  // gamma with gamma(X) <= 0
  std::vector<Vec> rays;
  std::vector<ReportWall> walls;
  std::vector<Vec> edge;  // basis of a_E
  friend bool operator==(const ReportCone&, const ReportCone&) = default;
};

struct ReportChamber {
  std::vector<int> signs;
  Vec point;
  std::vector<Vec> limit;
  std::size_t a_dim = 0;
  bool ok = false;
  friend bool operator==(const ReportChamber&, const ReportChamber&) = default;
};

struct ReportAdmissibility {
  bool admissible = false;  // at the base point
  std::vector<ReportChamber> chambers;
  bool search_found = false;
  std::string search_method;
  std::size_t search_samples = 0;
  std::vector<WordEntry> search_word;
  friend bool operator==(const ReportAdmissibility&, const ReportAdmissibility&) = default;
};

struct ReportGenerator {
  Vec wall;  // facet normal of the wall
  IntVec sigma;
  std::string witness;
  IntVec beta, gamma;
  Vec a_h_witness;
  IntVec word;  // 1-based
  std::vector<Vec> on_a;
  friend bool operator==(const ReportGenerator&, const ReportGenerator&) = default;
};

struct ReportWeyl {
  std::size_t order = 0;
  std::string coxeter_type;
  std::vector<std::vector<int>> coxeter_matrix;
  std::vector<ReportGenerator> generators;
  std::vector<std::string> cosets;        // from the wall reflections
  std::vector<std::string> limit_cosets;  // from limits at the admissible point found
  bool tiling = false;
  std::vector<std::string> diagnostics;
  friend bool operator==(const ReportWeyl&, const ReportWeyl&) = default;
};

struct ReportSigmaZ {
  std::vector<IntVec> lattice_basis, roots;
  std::vector<std::vector<int>> coxeter_orders;
  bool lattice_preserved = false, roots_permuted = false, generates_w = false;
  friend bool operator==(const ReportSigmaZ&, const ReportSigmaZ&) = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  ReportSpace space;
  ReportAdaptedness adaptedness;
  std::optional<ReportQ> q;
  std::optional<ReportT> t;
  std::optional<ReportCone> cone;
  std::optional<ReportAdmissibility> admissibility;
  std::optional<ReportWeyl> weyl;
  std::optional<ReportSigmaZ> sigma_Z;
  std::vector<CheckResult> verification;

  bool verification_passed() const;
  /// Non-empty when an internal cross-check failed.
  std::vector<std::string> diagnostics() const;
  friend bool operator==(const Report&, const Report&) = default;
};

inline void to_json(nlohmann::json& j, const WordEntry& e) { j = word_to_json({e})[0]; }
inline void from_json(const nlohmann::json& j, WordEntry& e) { e = word_from_json(nlohmann::json::array({j}), "")[0]; }

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckResult, name, passed, cases, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportSpace, name, cartan_type, cartan_matrix, center_dim, dim, basis, subalgebra,
                                   note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportAdaptedness, adapted, open_P_orbit, reason, diagnostics)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportQ, sigma0, sigmaQ, l_Q_dim, l_nc_dim, n_Q_dim, positive_point)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportSupport, alpha, T, roots, a)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportT, supports, S_z, indecomposables, a_h, h_empty_dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportWall, normal, rays, lineality)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportCone, whole, inequalities, rays, walls, edge)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportChamber, signs, point, limit, a_dim, ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportAdmissibility, admissible, chambers, search_found, search_method,
                                   search_samples, search_word)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportGenerator, wall, sigma, witness, beta, gamma, a_h_witness, word, on_a)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportWeyl, order, coxeter_type, coxeter_matrix, generators, cosets, limit_cosets,
                                   tiling, diagnostics)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportSigmaZ, lattice_basis, roots, coxeter_orders, lattice_preserved,
                                   roots_permuted, generates_w)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Report, schema_version, space, adaptedness, q, t, cone, admissibility, weyl,
                                   sigma_Z, verification)

struct ReportOptions {
  std::uint64_t seed = 1;
  std::size_t max_iters = 10;
  MLattice lattice = MLattice::Coroot;
  bool verify = true;
};

Report build_report(const SpaceDescription& s, const ReportOptions& opt = {});

nlohmann::json report_to_json(const Report& r);
/// Throws ParseError.
Report report_from_json(const nlohmann::json& j);

/// Cosets w W_J with lim = chi Ad(n_w) h_empty, sorted.
std::vector<std::string> match_cosets(const LieAlgebra& g, const SphericalAnalysis& an, const Subspace& lim,
                                      MLattice lattice = MLattice::Coroot);

}  // namespace lwg
