#include "lwg/invariants.hpp"

#include "lwg/limits.hpp"
#include "lwg/weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lwg {

namespace {

// Runs body, turning exceptions into a failure.
CheckResult run_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  return r;
}

void expect(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) r.fail(what);
}

Subspace a_cap(const LieAlgebra& g, const Subspace& h) { return g.to_a_coords(h.intersect(g.a())); }

std::vector<std::string> coset_labels(const LittleWeylGroup& w) {
  std::vector<std::string> out;
  for (const auto& e : w.elements) out.push_back(e.coset_label);
  std::sort(out.begin(), out.end());
  return out;
}

Vec sample_a_circ_reg(const LieAlgebra& g, const SphericalAnalysis& an, Sampler& rnd) {
  while (true) {
    Vec y = zeros(g.a_dim());
    for (const auto& b : an.a_circ.basis()) axpy(y, rnd.rational(4), b);
    if (in_a_circ_reg(g, an, y)) return y;
  }
}

}  // namespace

std::vector<CheckResult> verify_space(const LieAlgebra& g, const BasePoint& z, std::uint64_t seed) {
  std::vector<CheckResult> out;
  if (!is_adapted(g, z.h_z)) {
    CheckResult r;
    r.name = "adapted";
    r.cases = 1;
    r.fail("base point is not adapted: " + check_adapted(g, z.h_z).reason);
    return {r};
  }
  const SphericalAnalysis an = analyze(g, z.h_z);
  const Cone c = compression_cone(g, an);
  const std::size_t n = g.dim();
  const auto& rs = g.root_system();
  auto f_of = [&](std::size_t i) { return unit(n, g.root_vector(rs.negative_of(an.q.sigmaQ[i]))); };

  out.push_back(run_check("graph_decomposition", [&](CheckResult& r) {
    std::vector<Vec> graph = an.l_cap_h.basis();
    for (std::size_t i = 0; i < an.T.size(); ++i) {
      graph.push_back(add(f_of(i), an.T[i]));
      Vec t_rest = an.T[i];
      Vec a_part = g.project_a(t_rest);
      expect(r, an.a_circ.contains(a_part), "T has an a-component outside a_circ");
      axpy(t_rest, -1, g.embed_a(a_part));
      expect(r, an.q.n_Q.contains(t_rest), "T leaves a_circ + n_Q");
    }
    expect(r, Subspace::span(n, graph) == z.h_z && graph.size() == z.h_z.dim(), "h_z != (l_Q cap h_z) + graph(T)");
    for (const auto& s : an.S_z)
      for (const auto& x : an.a_h.basis()) expect(r, sgn(g.evaluate(s, x)) == 0, "element of S_z nonzero on a_h");
    expect(r, g.is_subalgebra(an.h_empty), "h_empty is not a subalgebra");
  }));

  out.push_back(run_check("brion_symmetry", [&](CheckResult& r) {
    for (const auto& x : an.q.v.basis()) {
      Vec xe = g.embed_a(x);
      for (std::size_t i = 0; i < an.T.size(); ++i)
        for (std::size_t j = 0; j < an.T.size(); ++j)
          expect(r, g.form(g.bracket(xe, f_of(i)), an.T[j]) == g.form(g.bracket(xe, f_of(j)), an.T[i]),
                 "B([X,Y1],T(Y2)) != B([X,Y2],T(Y1))");
    }
  }));

  out.push_back(run_check("tperp", [&](CheckResult& r) {
    for (const auto& x : an.a_circ.basis()) {
      Vec t = apply_Tperp(g, an, x);
      Vec sum = add(g.embed_a(x), t);
      for (const auto& b : z.h_z.basis()) expect(r, sgn(g.form(sum, b)) == 0, "X + T-perp(X) not in h_z-perp");
      for (const auto& b : an.l_cap_h.basis()) expect(r, is_zero(g.bracket(t, b)), "T-perp(X) does not centralize l_Q cap h_z");
      expect(r, an.q.n_Q.contains(t), "T-perp(X) not in n_Q");
    }
  }));

  out.push_back(run_check("q_cap_h", [&](CheckResult& r) {
    expect(r, (an.q.l_Q + an.q.n_Q).intersect(z.h_z) == an.l_cap_h, "q cap h_z != l_Q cap h_z");
    expect(r, z.h_z.contains(an.q.l_nc), "l_nc not in h_z");
  }));

  out.push_back(run_check("cone_contains_negative_chamber", [&](CheckResult& r) {
    std::vector<Vec> simple;
    for (std::size_t i = 0; i < g.rank(); ++i) simple.push_back(g.functional(rs.positive_roots()[i]));
    expect(r, c.contains(Cone::from_inequalities(g.a_dim(), simple)), "closure of a^- not in the cone");
  }));

  out.push_back(run_check("cone_plus_a_h", [&](CheckResult& r) { expect(r, c.plus(an.a_h) == c, "C + a_h != C"); }));

  out.push_back(run_check("edge_is_normalizer", [&](CheckResult& r) {
    expect(r, c.edge() == g.normalizer_in_a(z.h_z), "edge != N_a(h_z)");
  }));

  out.push_back(run_check("face_degenerations", [&](CheckResult& r) {
    for (const auto& f : c.faces()) {
      auto d = boundary_degeneration(g, an, f);
      expect(r, g.is_subalgebra(d.h_zF), "h_zF is not a subalgebra");
      expect(r, a_cap(g, d.h_zF) == an.a_h, "a cap h_zF != a_h");
      expect(r, g.normalizer_in_a(d.h_zF) == f.linear_span(), "N_a(h_zF) != a_F");
      expect(r, d.h_zF == limit_subspace(g, z.h_z, face_interior_point(f)), "h_zF != limit at a face-interior point");
      if (is_adapted(g, d.h_zF))
        expect(r, compression_cone(g, analyze(g, d.h_zF)) == c.plus(f.linear_span()), "cone of h_zF != C + a_F");
    }
  }));

  Sampler rnd(seed);
  out.push_back(run_check("phi", [&](CheckResult& r) {
    if (an.a_circ.dim() == 0) return;
    for (int k = 0; k < 5; ++k) {
      Vec y = sample_a_circ_reg(g, an, rnd);
      Vec p = phi(g, an, y);  // verifies the defining identity
      expect(r, an.q.n_Q.contains(p), "Phi(Y) not in n_Q");
    }
  }));

  out.push_back(run_check("phi_degeneration", [&](CheckResult& r) {
    if (an.a_circ.dim() == 0) return;
    for (const auto& f : c.faces()) {
      auto d = boundary_degeneration(g, an, f);
      if (!is_adapted(g, d.h_zF)) continue;
      auto anf = analyze(g, d.h_zF);
      expect(r, anf.q.sigmaQ == an.q.sigmaQ, "degeneration changes Sigma(Q)");
      if (anf.q.sigmaQ != an.q.sigmaQ || anf.a_circ != an.a_circ) continue;
      Vec x = face_interior_point(f);
      for (int k = 0; k < 3; ++k) {
        Vec y = sample_a_circ_reg(g, an, rnd);
        Vec p = phi(g, an, y);
        for (std::size_t i = 0; i < an.sigmaQ_roots.size(); ++i)
          if (sgn(g.evaluate(an.sigmaQ_roots[i], x)) != 0) p[g.root_vector(an.q.sigmaQ[i])] = 0;
        expect(r, p == phi(g, anf, y), "truncated Phi != Phi of the degeneration");
      }
    }
  }));

  out.push_back(run_check("orbit_independence", [&](CheckResult& r) {
    for (int k = 0; k < 3; ++k) {
      Vec q(g.rank());
      for (auto& v : q) v = Rational(rnd.integer(1, 4), rnd.integer(1, 4));
      expect(r, a_cap(g, z.h_z.image(torus_action(g, q))) == an.a_h, "torus translate changes a cap h_z");
    }
    // n-elements centralizing l_Q cap h_z
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      Vec col;
      for (const auto& b : an.l_cap_h.basis()) {
        Vec br = g.bracket(unit(n, g.root_vector(k)), b);
        col.insert(col.end(), br.begin(), br.end());
      }
      cols.push_back(col);
    }
    std::vector<Vec> ker;
    if (an.l_cap_h.dim() == 0) {
      for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) ker.push_back(unit(rs.positive_roots().size(), k));
    } else {
      ker = nullspace(Mat::from_columns(cols, n * an.l_cap_h.dim()));
    }
    for (int k = 0; k < 3 && !ker.empty(); ++k) {
      Vec y = zeros(n);
      for (const auto& v : ker) {
        Rational c0 = rnd.rational(2);
        for (std::size_t i = 0; i < v.size(); ++i) y[g.root_vector(i)] += c0 * v[i];
      }
      expect(r, a_cap(g, z.h_z.image(nilpotent_action(g, y))) == an.a_h, "n translate changes a cap h_z");
    }
    auto found = find_admissible(g, z, seed, 10, true);
    if (found.found) expect(r, a_cap(g, found.point.h_z) == an.a_h, "admissible point has a different a cap h");
  }));

  out.push_back(run_check("cone_monotonicity", [&](CheckResult& r) {
    for (int k = 0; k < 4; ++k) {
      Vec y = zeros(n);
      for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) y[g.root_vector(i)] = rnd.integer(-1, 1);
      Subspace h2 = z.h_z.image(nilpotent_action(g, y));
      if (!has_open_P_orbit(g, h2)) continue;
      if (is_adapted(g, h2)) {
        expect(r, compression_cone(g, analyze(g, h2)) == c, "adapted translate has a different cone");
      } else {
        expect(r, c.contains(cone_by_limits(g, h2, an.h_empty).cone), "cone of a non-adapted translate not in C");
      }
    }
  }));

  LittleWeylGroup w;
  out.push_back(run_check("little_weyl_group", [&](CheckResult& r) {
    w = little_weyl_group(g, an, 10000, seed);
    expect(r, w.diagnostics.empty(), w.diagnostics.empty() ? "" : w.diagnostics.front());
    expect(r, w.generators.size() == c.walls().size(), "generator count != wall count");
  }));

  out.push_back(run_check("tiling", [&](CheckResult& r) {
    expect(r, w.tiling.disjoint, "images of the open cone overlap");
    expect(r, w.tiling.covering, "arrangement certificate: a chamber is not covered exactly once");
    expect(r, w.tiling.sample_covered, "sample point outside every image");
  }));

  out.push_back(run_check("degeneration_subgroup", [&](CheckResult& r) {
    for (const auto& gen : w.generators) {
      auto d = boundary_degeneration(g, an, gen.wall);
      auto anf = analyze(g, d.h_zF);
      auto wf = little_weyl_group(g, anf, 10000, seed);
      expect(r, wf.order == 2, "degeneration at a wall has order != 2");
      expect(r, wf.generators.size() == 1 && anf.a_circ == an.a_circ && wf.generators[0].on_quotient == gen.on_quotient,
             "degeneration generator differs from the wall generator");
    }
  }));

  out.push_back(run_check("crystallographic", [&](CheckResult& r) {
    for (const auto& row : w.coxeter_matrix)
      for (int m : row) expect(r, m == 1 || m == 2 || m == 3 || m == 4 || m == 6, "product order " + std::to_string(m));
    auto sr = spherical_roots(g, w);
    expect(r, sr.lattice_preserved, "W does not preserve Lambda");
    expect(r, sr.generates_w, "W(Sigma_Z) != W");
    expect(r, sr.roots_permuted, "W does not permute Sigma_Z");
    std::set<IntVec> roots(sr.roots.begin(), sr.roots.end());
    for (const auto& a : sr.roots) {
      IntVec neg(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
      expect(r, roots.count(neg) > 0, "Sigma_Z != -Sigma_Z");
      std::vector<Vec> cols;
      for (const auto& l : sr.lattice_basis) cols.push_back(to_vec(l));
      auto coords = solve(Mat::from_columns(cols, g.rank()), to_vec(a));
      bool prim = coords && (primitive(*coords) == *coords || primitive(scale(-1, *coords)) == scale(-1, *coords));
      expect(r, prim, "spherical root not primitive in Lambda");
    }
  }));

  std::optional<FindResult> found;
  out.push_back(run_check("admissible_search", [&](CheckResult& r) {
    found = find_admissible(g, z, seed, 10, false);
    expect(r, found->found, "no admissible point within 10 samples");
    expect(r, found->samples <= 10, "more than 10 samples");
  }));

  out.push_back(run_check("agreement", [&](CheckResult& r) {
    if (!found || !found->found) {
      r.fail("no admissible point");
      return;
    }
    auto an2 = analyze(g, found->point.h_z);
    auto lim = weyl_from_limits(g, an2);
    expect(r, lim.diagnostics.empty(), lim.diagnostics.empty() ? "" : lim.diagnostics.front());
    expect(r, lim.cosets == coset_labels(little_weyl_group(g, an2, 10000, seed)), "limit cosets != wall-generated cosets");
    expect(r, lim.cosets == coset_labels(w), "limit cosets != cosets at the base point");
  }));
  return out;
}

CheckResult verify_claims(const SpaceDescription& s) {
  return run_check("claims", [&](CheckResult& r) {
    if (!s.claims) return;
    LieAlgebra g = s.algebra();
    auto diffs = compare_records(*s.claims, compute_record(g, s.base(g)));
    ++r.cases;
    for (const auto& d : diffs) r.fail(d);
    if (diffs.size() > 1) r.detail += " (and " + std::to_string(diffs.size() - 1) + " more)";
  });
}

std::vector<CheckResult> verify_catalog_entry(const CatalogEntry& e, std::uint64_t seed) {
  LieAlgebra g = e.space.algebra();
  BasePoint z = e.space.base(g);
  auto out = verify_space(g, z, seed);
  out.push_back(verify_claims(e.space));
  if (e.translate) {
    out.push_back(run_check("translate_witness", [&](CheckResult& r) {
      Subspace moved = translate(g, z.h_z, e.translate->word).h_z;
      expect(r, has_open_P_orbit(g, moved), "translate has no open P-orbit");
      expect(r, !is_adapted(g, moved), "translate is adapted");
      auto an = analyze(g, z.h_z);
      Cone lc = cone_by_limits(g, moved, an.h_empty).cone;
      expect(r, lc == Cone::from_inequalities(g.a_dim(), e.translate->cone_facets), "cone of the translate differs");
      expect(r, compression_cone(g, an).contains(lc) && !(lc == compression_cone(g, an)), "cone not strictly smaller");
    }));
  }
  auto an = analyze(g, z.h_z);
  Cone c = compression_cone(g, an);
  if (c.is_full_dimensional() && c.facets().size() == 1) {
    out.push_back(run_check("nt_fallback", [&](CheckResult& r) {
      auto nt = nt_fallback(g, z, 8);
      expect(r, nt.success, "n_t family fails for t <= 8");
      if (nt.success) expect(r, admissibility(g, analyze(g, nt.point.h_z)).admissible, "n_t point not admissible");
      if (r.passed) r.detail = nt.constant_family ? "constant family" : "t = " + std::to_string(nt.t);
    }));
  }
  return out;
}

}  // namespace lwg
