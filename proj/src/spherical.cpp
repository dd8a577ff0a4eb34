#include "lwg/spherical.hpp"

#include "lwg/limits.hpp"
#include "lwg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lwg {

Mat word_entry_action(const LieAlgebra& g, const WordEntry& e) {
  switch (e.kind) {
    case WordEntry::Kind::Nilpotent:
      if (e.data.size() != g.dim()) throw std::invalid_argument("nilpotent generator has wrong length");
      return nilpotent_action(g, e.data);
    case WordEntry::Kind::Torus:
      return torus_action(g, e.data);
    case WordEntry::Kind::Weyl:
      return weyl_lift(g, e.word).adjoint_lift;
  }
  throw std::logic_error("unknown word entry");
}

BasePoint translate(const LieAlgebra& g, const Subspace& h, const std::vector<WordEntry>& word) {
  Subspace cur = h;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = cur.image(word_entry_action(g, *it));
  return {word, cur};
}

bool has_open_P_orbit(const LieAlgebra& g, const Subspace& h_z) { return (h_z + g.p()).dim() == g.dim(); }

std::optional<QData> recover_Q(const LieAlgebra& g, const Subspace& h_z, std::string* reason) {
  const auto& rs = g.root_system();
  QData q;
  q.v = g.to_a_coords(g.orthocomplement(h_z).intersect(g.a()));
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    Vec f = g.functional(rs.roots()[k]);
    bool vanish = std::all_of(q.v.basis().begin(), q.v.basis().end(), [&](const Vec& x) { return sgn(dot(f, x)) == 0; });
    (vanish ? q.sigma0 : q.sigmaQ).push_back(k);
  }
  std::vector<Vec> gam;
  for (auto k : q.sigmaQ) {
    Vec f = g.functional(rs.roots()[k]);
    Vec row;
    for (const auto& x : q.v.basis()) row.push_back(-dot(f, x));
    gam.push_back(row);
  }
  auto y = strictly_negative_point(q.v.dim(), gam);
  if (!y) {
    if (reason) *reason = "positivity_infeasible";
    return std::nullopt;
  }
  q.positive_point = zeros(g.a_dim());
  for (std::size_t j = 0; j < q.v.dim(); ++j) axpy(q.positive_point, (*y)[j], q.v.basis()[j]);

  const std::size_t n = g.dim();
  q.l_Q = g.centralizer(q.v);
  std::vector<Vec> nc, nq, nbq;
  for (auto k : q.sigma0) {
    Vec e = unit(n, g.root_vector(k)), f = unit(n, g.root_vector(rs.negative_of(k)));
    nc.push_back(e);
    nc.push_back(f);
    nc.push_back(g.bracket(e, f));
  }
  for (auto k : q.sigmaQ) {
    nq.push_back(unit(n, g.root_vector(k)));
    nbq.push_back(unit(n, g.root_vector(rs.negative_of(k))));
  }
  q.l_nc = Subspace::span(n, nc);
  q.n_Q = Subspace::span(n, nq);
  q.nbar_Q = Subspace::span(n, nbq);
  if (!h_z.contains(q.l_nc)) {
    if (reason) *reason = "levi_not_in_h";
    return std::nullopt;
  }
  return q;
}

AdaptedReport check_adapted(const LieAlgebra& g, const Subspace& h_z) {
  AdaptedReport rep;
  if (!has_open_P_orbit(g, h_z)) {
    rep.reason = "no_open_P_orbit";
    return rep;
  }
  rep.q = recover_Q(g, h_z, &rep.reason);
  if (!rep.q) return rep;
  rep.adapted = true;
  const QData& q = *rep.q;
  Subspace lh = q.l_Q.intersect(h_z);
  if ((q.l_Q + q.n_Q).intersect(h_z) != lh) rep.diagnostics.push_back("q cap h_z != l_Q cap h_z");
  if (g.orthocomplement(h_z).dim() != q.n_Q.dim() + q.l_Q.dim() - lh.dim())
    rep.diagnostics.push_back("dim h_z-perp != dim n_Q + dim l_Q - dim(l_Q cap h_z)");
  return rep;
}

bool is_adapted(const LieAlgebra& g, const Subspace& h_z) { return check_adapted(g, h_z).adapted; }

namespace {

// Unique coefficients c with base + sum c_j cols_j in target.
std::optional<Vec> solve_into(const Subspace& target, const Vec& base, const std::vector<Vec>& cols) {
  const std::size_t n = target.ambient_dim();
  std::vector<Vec> reduced;
  for (const auto& c : cols) reduced.push_back(target.reduce(c));
  Mat m = Mat::from_columns(reduced, n);
  if (rank(m) != cols.size()) return std::nullopt;
  return solve(m, scale(-1, target.reduce(base)));
}

bool all_nonneg(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
}

IntVec plus(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec minus(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool monoid_search(const IntVec& v, const std::vector<IntVec>& gens, std::map<IntVec, bool>& memo) {
  if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) return true;
  if (auto it = memo.find(v); it != memo.end()) return it->second;
  bool found = false;
  for (const auto& gen : gens) {
    IntVec rest = minus(v, gen);
    if (all_nonneg(rest) && monoid_search(rest, gens, memo)) {
      found = true;
      break;
    }
  }
  memo[v] = found;
  return found;
}

}  // namespace

bool in_monoid(const IntVec& v, const std::vector<IntVec>& generators) {
  if (!all_nonneg(v)) return false;
  for (const auto& gen : generators)
    if (!all_nonneg(gen) || std::all_of(gen.begin(), gen.end(), [](long x) { return x == 0; }))
      throw std::invalid_argument("monoid generators must be nonzero and nonnegative");
  std::map<IntVec, bool> memo;
  return monoid_search(v, generators, memo);
}

SphericalAnalysis analyze(const LieAlgebra& g, const Subspace& h_z) {
  AdaptedReport rep = check_adapted(g, h_z);
  if (!rep.adapted) throw NotAdapted(rep.reason);
  if (!rep.diagnostics.empty()) throw ContractError("adapted point fails cross-check: " + rep.diagnostics.front());
  const auto& rs = g.root_system();
  const std::size_t n = g.dim();
  SphericalAnalysis an;
  an.h_z = h_z;
  an.q = *rep.q;
  an.a_h = g.to_a_coords(h_z.intersect(g.a()));
  {
    Mat gram = g.form_on_a();
    std::vector<Vec> rows;
    for (const auto& x : an.a_h.basis()) rows.push_back(gram * x);
    an.a_circ = rows.empty() ? Subspace::whole(g.a_dim()) : Subspace::span(g.a_dim(), nullspace(Mat::from_rows(rows, g.a_dim())));
  }
  an.l_cap_h = an.q.l_Q.intersect(h_z);

  std::vector<Vec> complement;
  for (const auto& x : an.a_circ.basis()) complement.push_back(g.embed_a(x));
  for (auto k : an.q.sigmaQ) complement.push_back(unit(n, g.root_vector(k)));
  for (auto k : an.q.sigmaQ) {
    an.sigmaQ_roots.push_back(rs.roots()[k]);
    Vec y = unit(n, g.root_vector(rs.negative_of(k)));
    auto c = solve_into(h_z, y, complement);
    if (!c) throw ContractError("graph decomposition of h_z is infeasible");
    Vec t = zeros(n);
    for (std::size_t j = 0; j < complement.size(); ++j) axpy(t, (*c)[j], complement[j]);
    an.T.push_back(t);
  }
  {
    std::vector<Vec> graph = an.l_cap_h.basis();
    for (std::size_t i = 0; i < an.T.size(); ++i)
      graph.push_back(add(unit(n, g.root_vector(rs.negative_of(an.q.sigmaQ[i]))), an.T[i]));
    if (Subspace::span(n, graph) != h_z || graph.size() != h_z.dim())
      throw ContractError("h_z is not (l_Q cap h_z) + graph(T)");
  }

  // T-perp: X + Y in h_z-perp with Y in n_Q
  for (const auto& x : an.a_circ.basis()) {
    Vec xe = g.embed_a(x);
    const std::size_t m = an.q.sigmaQ.size();
    Mat sys(h_z.dim(), m);
    Vec rhs(h_z.dim());
    for (std::size_t i = 0; i < h_z.dim(); ++i) {
      const Vec& hb = h_z.basis()[i];
      rhs[i] = -g.form(xe, hb);
      for (std::size_t j = 0; j < m; ++j) sys(i, j) = g.form(unit(n, g.root_vector(an.q.sigmaQ[j])), hb);
    }
    auto y = solve(sys, rhs);
    if (!y || rank(sys) != m) throw ContractError("T-perp is not uniquely solvable");
    Vec out = zeros(n);
    for (std::size_t j = 0; j < m; ++j) out[g.root_vector(an.q.sigmaQ[j])] = (*y)[j];
    an.Tperp.push_back(out);
  }

  std::set<IntVec> s;
  for (std::size_t i = 0; i < an.T.size(); ++i) {
    Support sup;
    sup.alpha = an.sigmaQ_roots[i];
    sup.a = !is_zero(g.project_a(an.T[i]));
    if (sup.a) s.insert(sup.alpha);
    for (std::size_t j = 0; j < an.q.sigmaQ.size(); ++j)
      if (sgn(an.T[i][g.root_vector(an.q.sigmaQ[j])]) != 0) {
        sup.roots.push_back(an.sigmaQ_roots[j]);
        s.insert(plus(sup.alpha, an.sigmaQ_roots[j]));
      }
    an.supports.push_back(sup);
  }
  an.S_z.assign(s.begin(), s.end());
  for (const auto& sigma : an.S_z) {
    bool decomposable = false;
    for (const auto& other : an.S_z) {
      if (other == sigma) continue;
      IntVec rest = minus(sigma, other);
      if (all_nonneg(rest) && in_monoid(rest, an.S_z)) decomposable = true;
    }
    if (!decomposable) an.indecomposables.push_back(sigma);
  }
  an.h_empty = an.l_cap_h + an.q.nbar_Q;
  return an;
}

Vec apply_T(const LieAlgebra& g, const SphericalAnalysis& an, const Vec& y) {
  if (!an.q.nbar_Q.contains(y)) throw std::invalid_argument("apply_T: argument not in nbar_Q");
  const auto& rs = g.root_system();
  Vec out = zeros(g.dim());
  for (std::size_t i = 0; i < an.T.size(); ++i) axpy(out, y[g.root_vector(rs.negative_of(an.q.sigmaQ[i]))], an.T[i]);
  return out;
}

Vec apply_Tperp(const LieAlgebra& g, const SphericalAnalysis& an, const Vec& x_a) {
  Vec c = an.a_circ.coordinates(x_a);
  Vec out = zeros(g.dim());
  for (std::size_t j = 0; j < c.size(); ++j) axpy(out, c[j], an.Tperp[j]);
  return out;
}

Cone compression_cone(const LieAlgebra& g, const SphericalAnalysis& an) {
  std::vector<Vec> gam;
  for (const auto& s : an.S_z) gam.push_back(g.functional(s));
  return Cone::from_inequalities(g.a_dim(), gam);
}

bool in_a_circ_reg(const LieAlgebra& g, const SphericalAnalysis& an, const Vec& x_a) {
  if (!an.a_circ.contains(x_a)) return false;
  for (const auto& r : an.sigmaQ_roots)
    if (sgn(g.evaluate(r, x_a)) == 0) return false;
  return true;
}

Vec phi(const LieAlgebra& g, const SphericalAnalysis& an, const Vec& x_a) {
  if (!in_a_circ_reg(g, an, x_a)) throw std::invalid_argument("phi: X is not in the regular part of a-circ");
  const std::size_t n = g.dim();
  Vec x = g.embed_a(x_a);
  Vec target = add(x, apply_Tperp(g, an, x_a));
  long max_height = 0;
  for (const auto& r : an.sigmaQ_roots) max_height = std::max(max_height, RootSystem::height(r));
  Vec p = zeros(n);
  auto residual = [&] { return sub(exp_nilpotent(Rational(-1) * g.ad(p)) * x, target); };
  for (long h = 1; h <= max_height; ++h) {
    Vec r = residual();
    for (std::size_t i = 0; i < an.sigmaQ_roots.size(); ++i) {
      if (RootSystem::height(an.sigmaQ_roots[i]) != h) continue;
      std::size_t b = g.root_vector(an.q.sigmaQ[i]);
      p[b] -= r[b] / g.evaluate(an.sigmaQ_roots[i], x_a);
    }
  }
  if (!is_zero(residual())) throw ContractError("phi: defining identity fails after solving");
  return p;
}

Vec face_interior_point(const Cone& face) {
  Vec p = face.interior_point();
  long k = 1;
  for (const auto& l : face.lineality().basis()) axpy(p, Rational(k++, 7), l);
  return p;
}

DegenerationData boundary_degeneration(const LieAlgebra& g, const SphericalAnalysis& an, const Cone& face) {
  Cone c = compression_cone(g, an);
  auto faces = c.faces();
  if (std::find(faces.begin(), faces.end(), face) == faces.end())
    throw std::invalid_argument("boundary_degeneration: not a face of the compression cone");
  DegenerationData d;
  d.face = face;
  for (const auto& s : an.S_z) {
    Vec f = g.functional(s);
    bool vanish = true;
    for (const auto& r : face.rays()) vanish = vanish && sgn(dot(f, r)) == 0;
    for (const auto& l : face.lineality().basis()) vanish = vanish && sgn(dot(f, l)) == 0;
    if (vanish) d.monoid_generators.push_back(s);
  }
  const auto& rs = g.root_system();
  const std::size_t n = g.dim();
  std::vector<Vec> basis = an.l_cap_h.basis();
  for (std::size_t i = 0; i < an.T.size(); ++i) {
    const IntVec& alpha = an.sigmaQ_roots[i];
    Vec t = zeros(n);
    if (in_monoid(alpha, d.monoid_generators)) t = g.embed_a(g.project_a(an.T[i]));
    for (std::size_t j = 0; j < an.q.sigmaQ.size(); ++j) {
      std::size_t b = g.root_vector(an.q.sigmaQ[j]);
      if (sgn(an.T[i][b]) != 0 && in_monoid(plus(alpha, an.sigmaQ_roots[j]), d.monoid_generators)) t[b] = an.T[i][b];
    }
    basis.push_back(add(unit(n, g.root_vector(rs.negative_of(an.q.sigmaQ[i]))), t));
  }
  d.h_zF = Subspace::span(n, basis);
  return d;
}

ChamberSet order_regular_chambers(const LieAlgebra& g) {
  std::vector<Vec> hs;
  for (const auto& h : order_regular_hyperplanes(g)) hs.push_back(g.functional(h));
  return enumerate_chambers(g.a_dim(), hs);
}

AdmissibilityReport admissibility(const LieAlgebra& g, const SphericalAnalysis& an) {
  AdmissibilityReport rep;
  rep.admissible = true;
  for (const auto& ch : order_regular_chambers(g).chambers) {
    ChamberLimit cl;
    cl.signs = ch.signs;
    cl.point = ch.point;
    cl.limit = limit_subspace(g, an.h_z, ch.point);
    cl.a_dim = cl.limit.intersect(g.a()).dim();
    cl.ok = cl.a_dim == an.a_h.dim();
    rep.admissible = rep.admissible && cl.ok;
    rep.chambers.push_back(std::move(cl));
  }
  return rep;
}

NtResult nt_fallback(const LieAlgebra& g, const BasePoint& z, long max_t) {
  SphericalAnalysis an = analyze(g, z.h_z);
  Cone c = compression_cone(g, an);
  if (!(c.is_full_dimensional() && c.facets().size() == 1))
    throw std::invalid_argument("n_t family needs a compression cone that is an open half-space");
  NtResult res;
  res.point = z;
  // alpha with a in supp(g_{-alpha}), taking the smallest such root
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < an.supports.size(); ++i)
    if (an.supports[i].a && (!pick || RootSystem::height(an.supports[i].alpha) < RootSystem::height(an.supports[*pick].alpha)))
      pick = i;
  if (!pick) {
    res.constant_family = true;
    res.success = admissibility(g, an).admissible;
    return res;
  }
  res.alpha = an.supports[*pick].alpha;
  const std::size_t n = g.dim();
  const std::size_t b_alpha = g.root_vector(an.q.sigmaQ[*pick]);
  // ker(alpha) cap a_circ, and an element with p_alpha T-perp(X) != 0
  Vec fa = g.functional(res.alpha);
  std::vector<Vec> rows{fa};
  Mat gram = g.form_on_a();
  for (const auto& x : an.a_h.basis()) rows.push_back(gram * x);
  for (const auto& x : nullspace(Mat::from_rows(rows, g.a_dim())))
    if (sgn(apply_Tperp(g, an, x)[b_alpha]) != 0) {
      res.x = x;
      break;
    }
  if (res.x.empty()) throw ContractError("n_t family: p_alpha T-perp vanishes on ker(alpha) cap a_circ");
  Vec coroot = g.cartan_coroot(res.alpha);
  res.u = zeros(n);
  res.c = zeros(n);
  res.u[b_alpha] = apply_Tperp(g, an, res.x)[b_alpha] / 2;
  res.c[b_alpha] = apply_Tperp(g, an, coroot)[b_alpha] / 2;
  IntVec two = res.alpha;
  for (auto& v : two) v *= 2;
  if (auto k2 = g.root_system().index(two)) {
    std::size_t b2 = g.root_vector(*k2);
    res.u[b2] = apply_Tperp(g, an, res.x)[b2] / 4;
    res.c[b2] = apply_Tperp(g, an, coroot)[b2] / 4;
  }
  for (long t = 1; t <= max_t; ++t) {
    Vec gen = add(res.c, scale(t, res.u));
    std::vector<WordEntry> word{{WordEntry::Kind::Nilpotent, gen, {}}};
    word.insert(word.end(), z.word.begin(), z.word.end());
    BasePoint zt{word, z.h_z.image(nilpotent_action(g, gen))};
    if (!is_adapted(g, zt.h_z)) continue;
    if (admissibility(g, analyze(g, zt.h_z)).admissible) {
      res.success = true;
      res.t = t;
      res.point = zt;
      return res;
    }
  }
  return res;
}

FindResult find_admissible(const LieAlgebra& g, const BasePoint& z, std::uint64_t seed, std::size_t max_iters,
                           bool allow_nt) {
  FindResult res;
  SphericalAnalysis an = analyze(g, z.h_z);
  res.report = admissibility(g, an);
  if (res.report.admissible) {
    res.found = true;
    res.method = "input";
    res.point = z;
    return res;
  }
  Sampler rnd(seed);
  const auto& basis = an.a_circ.basis();
  for (std::size_t it = 0; it < max_iters && !basis.empty(); ++it) {
    Vec y;
    do {
      y = zeros(g.a_dim());
      for (const auto& b : basis) axpy(y, rnd.rational(4), b);
    } while (!in_a_circ_reg(g, an, y));
    ++res.samples;
    Vec p = phi(g, an, y);
    Subspace h2 = z.h_z.image(nilpotent_action(g, p));
    if (!is_adapted(g, h2)) continue;
    auto rep = admissibility(g, analyze(g, h2));
    if (rep.admissible) {
      std::vector<WordEntry> word{{WordEntry::Kind::Nilpotent, p, {}}};
      word.insert(word.end(), z.word.begin(), z.word.end());
      res.found = true;
      res.method = "sample";
      res.point = {word, h2};
      res.report = rep;
      return res;
    }
  }
  if (allow_nt) {
    Cone c = compression_cone(g, an);
    if (c.is_full_dimensional() && c.facets().size() == 1) {
      NtResult nt = nt_fallback(g, z, 8);
      if (nt.success) {
        res.found = true;
        res.method = "n_t";
        res.point = nt.point;
        res.report = admissibility(g, analyze(g, nt.point.h_z));
      }
    }
  }
  return res;
}

LimitCone cone_by_limits(const LieAlgebra& g, const Subspace& h_zprime, const Subspace& h_empty, MLattice lattice) {
  auto chambers = order_regular_chambers(g);
  auto chars = m_sign_characters(g, lattice);
  LimitCone out;
  std::vector<Vec> rays;
  auto chamber_cone = [&](const std::vector<int>& s) {
    std::vector<Vec> gam;
    for (std::size_t i = 0; i < s.size(); ++i) gam.push_back(scale(-s[i], chambers.hyperplanes[i]));
    return Cone::from_inequalities(g.a_dim(), gam);
  };
  for (const auto& ch : chambers.chambers) {
    Subspace lim = limit_subspace(g, h_zprime, ch.point);
    bool match = false;
    for (const auto& chi : chars.elements)
      if (h_empty.image(sign_character_matrix(g, chi)) == lim) match = true;
    if (!match) continue;
    out.matching.push_back(ch.signs);
    Cone cc = chamber_cone(ch.signs);
    rays.insert(rays.end(), cc.rays().begin(), cc.rays().end());
    for (const auto& l : cc.lineality().basis()) {
      rays.push_back(l);
      rays.push_back(scale(-1, l));
    }
  }
  out.cone = out.matching.empty() ? Cone(g.a_dim()) : Cone::from_generators(g.a_dim(), rays);
  // the union of matching chambers must be convex
  for (const auto& ch : chambers.chambers) {
    bool inside = out.cone.contains_interior(ch.point);
    bool matched = std::find(out.matching.begin(), out.matching.end(), ch.signs) != out.matching.end();
    if (inside != matched) throw ContractError("cone_by_limits: matching chambers do not form a convex cone");
  }
  return out;
}

}  // namespace lwg
