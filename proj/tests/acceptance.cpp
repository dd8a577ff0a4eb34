// One PASS/FAIL line per acceptance criterion, with wall time and budget.

#include "lwg/catalog.hpp"
#include "lwg/invariants.hpp"
#include "lwg/weyl.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

using namespace lwg;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::vector<std::string> labels(const LittleWeylGroup& w) {
  std::vector<std::string> out;
  for (const auto& e : w.elements) out.push_back(e.coset_label);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome g_nbar() {
  Outcome o;
  for (const char* name : {"A1_nbar", "A2_nbar"}) {
    const auto& e = find_entry(name);
    LieAlgebra g = e.space.algebra();
    BasePoint z = e.space.base(g);
    auto an = analyze(g, z.h_z);
    auto w = little_weyl_group(g, an);
    o.expect(compression_cone(g, an) == Cone::whole(g.a_dim()), std::string(name) + ": C != a");
    o.expect(w.order == 1, std::string(name) + ": W not trivial");
    o.expect(spherical_roots(g, w).roots.empty(), std::string(name) + ": Sigma_Z not empty");
    // translate by exp(sum of simple e_i): open P-orbit, not adapted, cone {alpha_i <= 0}
    Vec y = zeros(g.dim());
    for (std::size_t i = 0; i < g.rank(); ++i) y[g.root_vector(i)] = 1;
    Subspace moved = z.h_z.image(nilpotent_action(g, y));
    o.expect(has_open_P_orbit(g, moved), std::string(name) + ": translate lost the open P-orbit");
    o.expect(!is_adapted(g, moved), std::string(name) + ": translate is adapted");
    std::vector<Vec> simple;
    for (std::size_t i = 0; i < g.rank(); ++i) simple.push_back(g.functional(g.root_system().positive_roots()[i]));
    Cone expected = Cone::from_inequalities(g.a_dim(), simple);
    o.expect(cone_by_limits(g, moved, an.h_empty).cone == expected, std::string(name) + ": C_z' != {alpha <= 0}");
  }
  o.summary = "A1_nbar, A2_nbar: C = a, W = 1, Sigma_Z empty; exp(e) translate: C' = {alpha <= 0}";
  return o;
}

Outcome little_weyl_groups() {
  Outcome o;
  struct Want {
    const char* name;
    std::size_t order;
    const char* type;
  };
  for (const Want& want : {Want{"A1_so2", 2, "A1"}, Want{"A1_so11", 2, "A1"}, Want{"A1xA1_diag_w0", 2, "A1"},
                           Want{"A2_so3", 6, "A2"}}) {
    auto t0 = std::chrono::steady_clock::now();
    const auto& e = find_entry(want.name);
    LieAlgebra g = e.space.algebra();
    auto an = analyze(g, e.space.base(g).h_z);
    auto w = little_weyl_group(g, an);
    std::string n = want.name;
    o.expect(w.order == want.order, n + ": order " + std::to_string(w.order));
    o.expect(w.coxeter_type == want.type, n + ": type " + w.coxeter_type);
    // independent: float flows matched against brute-force cosets
    o.expect(oracle::flow_match(g, an).cosets.size() == want.order, n + ": flow oracle disagrees on |W|");
    if (n == "A1xA1_diag_w0") {
      bool ok = w.generators.size() == 1 && w.generators[0].witness == "pair";
      if (ok) {
        const auto& gen = w.generators[0];
        Vec h = gen.a_h_witness;
        Subspace coroots = Subspace::span(g.a_dim(), {g.cartan_coroot(gen.beta), g.cartan_coroot(gen.gamma)});
        ok = h.size() == 2 && sgn(h[0]) != 0 && h[0] == -h[1] && an.a_h.contains(h) && coroots.contains(h);
      }
      o.expect(ok, n + ": no orthogonal-pair witness (h, -h) in span(beta-check, gamma-check) cap a_h");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 5, n + ": over 5 s");
  }
  o.summary = "orders 2, 2, 2 (pair witness), 6; types A1, A1, A1, A2";
  return o;
}

Outcome agreement() {
  Outcome o;
  for (const auto& e : list_entries()) {
    LieAlgebra g = e.space.algebra();
    BasePoint z = e.space.base(g);
    auto found = find_admissible(g, z, kSeed, 10);
    if (!found.found) {
      o.expect(false, e.name() + ": no admissible point");
      continue;
    }
    auto an = analyze(g, found.point.h_z);
    auto lim = weyl_from_limits(g, an);
    auto w = little_weyl_group(g, an, 10000, kSeed);
    o.expect(lim.diagnostics.empty(), e.name() + ": limit diagnostics");
    o.expect(lim.cosets == labels(w), e.name() + ": limit cosets != wall-generated cosets");
    o.expect(oracle::flow_match(g, an).cosets == labels(w), e.name() + ": flow oracle cosets differ");
    o.expect(w.tiling.disjoint, e.name() + ": images overlap");
    o.expect(w.tiling.covering && w.tiling.sample_covered, e.name() + ": images do not cover a/a_h");
  }
  o.summary = std::to_string(list_entries().size()) + " entries: limit cosets = wall cosets, tiling disjoint and covering";
  return o;
}

Outcome limit_oracle() {
  Outcome o;
  CheckResult r = verify_limit_suite(kSeed, 240);
  o.expect(r.cases >= 200, "fewer than 200 instances");
  o.expect(r.passed, r.detail);
  o.summary = std::to_string(r.cases) + " random (E, X) instances in rank <= 2, flow distance < 1e-6 at t = 40";
  return o;
}

Outcome structural() {
  Outcome o;
  const std::set<std::string> wanted = {"brion_symmetry", "cone_contains_negative_chamber", "cone_plus_a_h",
                                        "edge_is_normalizer", "face_degenerations", "q_cap_h"};
  std::size_t cases = 0;
  for (const auto& e : list_entries()) {
    LieAlgebra g = e.space.algebra();
    std::set<std::string> seen;
    for (const auto& r : verify_space(g, e.space.base(g), kSeed)) {
      if (!wanted.count(r.name)) continue;
      seen.insert(r.name);
      cases += r.cases;
      o.expect(r.passed, e.name() + " " + r.name + ": " + r.detail);
    }
    o.expect(seen == wanted, e.name() + ": a structural suite did not run");
  }
  o.summary = std::to_string(cases) + " exact cases over " + std::to_string(wanted.size()) + " suites";
  return o;
}

Outcome crystallographic() {
  Outcome o;
  for (const auto& e : list_entries()) {
    LieAlgebra g = e.space.algebra();
    auto an = analyze(g, e.space.base(g).h_z);
    auto w = little_weyl_group(g, an);
    for (const auto& row : w.coxeter_matrix)
      for (int m : row) o.expect(m == 1 || m == 2 || m == 3 || m == 4 || m == 6, e.name() + ": order " + std::to_string(m));
    auto sr = spherical_roots(g, w);
    o.expect(sr.lattice_preserved, e.name() + ": Lambda not preserved");
    o.expect(sr.roots_permuted, e.name() + ": Sigma_Z not permuted");
    o.expect(sr.generates_w, e.name() + ": W(Sigma_Z) != W");
    // independent: group generated by B-orthogonal reflections in Sigma_Z
    o.expect(oracle::reflection_group_order(g, sr.roots) == w.order, e.name() + ": |W(Sigma_Z)| != |W|");
  }
  o.summary = "generator-pair orders in {1,2,3,4,6}, W preserves Lambda, W(Sigma_Z) = W";
  return o;
}

Outcome admissible() {
  Outcome o;
  std::size_t worst = 0;
  for (const auto& e : list_entries()) {
    LieAlgebra g = e.space.algebra();
    auto found = find_admissible(g, e.space.base(g), kSeed, 10, false);
    o.expect(found.found && found.samples <= 10, e.name() + ": no admissible point in 10 samples");
    worst = std::max(worst, found.samples);
  }
  const auto& e = find_entry("A1T1_fz");
  LieAlgebra g = e.space.algebra();
  auto nt = nt_fallback(g, e.space.base(g), 8);
  o.expect(!nt.constant_family, "A1T1_fz: n_t family is constant");
  o.expect(nt.success && nt.t >= 1 && nt.t <= 8, "A1T1_fz: n_t fallback failed for t <= 8");
  o.summary = "every entry needs at most " + std::to_string(worst) + " sample(s); n_t on A1T1_fz succeeds at t = " +
              std::to_string(nt.t);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "G/Nbar reproduction", 1, g_nbar},
      {2, "little Weyl groups", 20, little_weyl_groups},
      {3, "limit and wall agreement, tiling", 30, agreement},
      {4, "limit formula against float flows", 60, limit_oracle},
      {5, "structural invariants", 30, structural},
      {6, "crystallographic", 5, crystallographic},
      {7, "admissible points and n_t", 30, admissible},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.failures.push_back(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.budget) o.failures.push_back("time budget exceeded");
    bool ok = o.failures.empty();
    all = all && ok;
    std::printf("%s [%d] %s (%.3f s, budget %.0f s): %s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, c.budget,
                ok ? o.summary.c_str() : o.failures.front().c_str());
  }
  return all ? 0 : 1;
}
