#include "lwg/report.hpp"

#include "lwg/invariants.hpp"

#include <algorithm>
#include <set>

namespace lwg {

using nlohmann::json;

namespace {

std::vector<IntVec> roots_of(const LieAlgebra& g, const std::vector<std::size_t>& idx) {
  std::vector<IntVec> out;
  for (auto i : idx) out.push_back(g.root_system().roots()[i]);
  return out;
}

IntVec one_based(const IntVec& w) {
  IntVec out;
  for (long s : w) out.push_back(s + 1);
  return out;
}

std::vector<std::string> sorted_labels(const LittleWeylGroup& w) {
  std::vector<std::string> out;
  for (const auto& e : w.elements) out.push_back(e.coset_label);
  std::sort(out.begin(), out.end());
  return out;
}

ReportCone cone_block(const Cone& c) {
  ReportCone out;
  out.whole = c.facets().empty() && c.equations().empty();
  out.inequalities = c.inequalities();
  std::sort(out.inequalities.begin(), out.inequalities.end());
  out.rays = c.rays();
  out.edge = c.edge().basis();
  for (const Cone& w : c.walls()) {
    ReportWall rw;
    rw.rays = w.rays();
    rw.lineality = w.lineality().basis();
    for (const auto& f : c.facets()) {
      bool vanishes = true;
      for (const auto& r : rw.rays) vanishes = vanishes && sgn(dot(f, r)) == 0;
      for (const auto& l : rw.lineality) vanishes = vanishes && sgn(dot(f, l)) == 0;
      if (vanishes) rw.normal = f;
    }
    out.walls.push_back(std::move(rw));
  }
  std::sort(out.walls.begin(), out.walls.end(), [](const ReportWall& a, const ReportWall& b) { return a.normal < b.normal; });
  return out;
}

}  // namespace

bool Report::verification_passed() const {
  return std::all_of(verification.begin(), verification.end(), [](const CheckResult& r) { return r.passed; });
}

std::vector<std::string> Report::diagnostics() const {
  std::vector<std::string> out = adaptedness.diagnostics;
  if (weyl) out.insert(out.end(), weyl->diagnostics.begin(), weyl->diagnostics.end());
  return out;
}

std::vector<std::string> match_cosets(const LieAlgebra& g, const SphericalAnalysis& an, const Subspace& lim,
                                      MLattice lattice) {
  CosetTable table(g, an.q.sigma0);
  std::vector<Mat> chars;
  for (const auto& chi : m_sign_characters(g, lattice).elements) chars.push_back(sign_character_matrix(g, chi));
  std::set<std::string> found;
  for (const auto& w : table.elements()) {
    Subspace base = an.h_empty.image(w.adjoint_lift);
    for (const auto& chi : chars)
      if (base.image(chi) == lim) {
        found.insert(table.label(w.action_on_a));
        break;
      }
  }
  return {found.begin(), found.end()};
}

Report build_report(const SpaceDescription& s, const ReportOptions& opt) {
  LieAlgebra g = s.algebra();
  BasePoint z = s.base(g);
  Report r;
  r.space.name = s.name;
  r.space.cartan_type = s.cartan_type;
  r.space.cartan_matrix = g.cartan();
  r.space.center_dim = g.center_dim();
  r.space.dim = z.h_z.dim();
  r.space.basis = g.labels();
  r.space.subalgebra = z.h_z.basis();
  r.space.note = s.note;

  AdaptedReport ad = check_adapted(g, z.h_z);
  r.adaptedness.adapted = ad.adapted;
  r.adaptedness.open_P_orbit = has_open_P_orbit(g, z.h_z);
  r.adaptedness.reason = ad.reason;
  r.adaptedness.diagnostics = ad.diagnostics;
  if (!ad.adapted) return r;

  SphericalAnalysis an = analyze(g, z.h_z);
  ReportQ q;
  q.sigma0 = roots_of(g, an.q.sigma0);
  q.sigmaQ = roots_of(g, an.q.sigmaQ);
  q.l_Q_dim = an.q.l_Q.dim();
  q.l_nc_dim = an.q.l_nc.dim();
  q.n_Q_dim = an.q.n_Q.dim();
  q.positive_point = an.q.positive_point;
  r.q = q;

  ReportT t;
  for (std::size_t i = 0; i < an.supports.size(); ++i)
    t.supports.push_back({an.supports[i].alpha, an.T[i], an.supports[i].roots, an.supports[i].a});
  t.S_z = an.S_z;
  t.indecomposables = an.indecomposables;
  t.a_h = an.a_h.basis();
  t.h_empty_dim = an.h_empty.dim();
  r.t = t;

  r.cone = cone_block(compression_cone(g, an));

  ReportAdmissibility adm;
  AdmissibilityReport base = admissibility(g, an);
  adm.admissible = base.admissible;
  for (const auto& ch : base.chambers) adm.chambers.push_back({ch.signs, ch.point, ch.limit.basis(), ch.a_dim, ch.ok});
  FindResult found = find_admissible(g, z, opt.seed, opt.max_iters);
  adm.search_found = found.found;
  adm.search_method = found.method;
  adm.search_samples = found.samples;
  adm.search_word = found.point.word;
  r.admissibility = adm;

  LittleWeylGroup w = little_weyl_group(g, an, 10000, opt.seed);
  ReportWeyl rw;
  rw.order = w.order;
  rw.coxeter_type = w.coxeter_type;
  rw.coxeter_matrix = w.coxeter_matrix;
  for (const auto& gen : w.generators) {
    ReportGenerator rg;
    rg.wall = gen.wall.equations().empty() ? Vec{} : normalize_direction(gen.wall.equations().front());
    rg.sigma = gen.sigma;
    rg.witness = gen.witness;
    rg.beta = gen.beta;
    rg.gamma = gen.gamma;
    rg.a_h_witness = gen.a_h_witness;
    rg.word = one_based(gen.word);
    rg.on_a = gen.on_a.row_list();
    rw.generators.push_back(std::move(rg));
  }
  rw.cosets = sorted_labels(w);
  rw.tiling = w.tiling.disjoint && w.tiling.covering && w.tiling.sample_covered;
  rw.diagnostics = w.diagnostics;
  if (found.found) {
    LimitWeyl lim = weyl_from_limits(g, analyze(g, found.point.h_z), opt.lattice);
    rw.limit_cosets = lim.cosets;
    rw.diagnostics.insert(rw.diagnostics.end(), lim.diagnostics.begin(), lim.diagnostics.end());
  }
  r.weyl = rw;

  SphericalRootData sd = spherical_roots(g, w);
  r.sigma_Z = ReportSigmaZ{sd.lattice_basis, sd.roots,          sd.coxeter_orders,
                           sd.lattice_preserved, sd.roots_permuted, sd.generates_w};

  if (opt.verify) {
    r.verification = verify_space(g, z, opt.seed);
    if (s.claims) r.verification.push_back(verify_claims(s));
  }
  return r;
}

json report_to_json(const Report& r) { return r; }

Report report_from_json(const json& j) {
  try {
    Report r = j.get<Report>();
    if (r.schema_version != kSchemaVersion)
      throw ParseError("/schema_version: unsupported version " + std::to_string(r.schema_version));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("/: ") + e.what());
  }
}

}  // namespace lwg
