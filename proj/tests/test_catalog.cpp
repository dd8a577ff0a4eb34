#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lwg/catalog.hpp"
#include "lwg/invariants.hpp"
#include "oracles.hpp"

using namespace lwg;

TEST_CASE("catalog contents") {
  std::vector<std::string> names;
  for (const auto& e : list_entries()) names.push_back(e.name());
  CHECK(names.size() >= 6);
  for (const char* n : {"A1_nbar", "A1_so2", "A1_so11", "A1xA1_diag_w0", "A2_so3", "A2_nbar", "A1T1_fz"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(find_entry("B7_nothing"), std::out_of_range);
  CHECK(expected_results("A1_nbar").w_order == 1u);
  CHECK(expected_results("A1_so2").sigma_Z == std::vector<IntVec>{{-1}, {1}});
  for (const auto& e : list_entries()) {
    CAPTURE(e.name());
    CHECK_FALSE(e.quasi_affine_note.empty());
    CHECK_FALSE(e.oracle.empty());
  }
}

TEST_CASE("pipeline reproduces every expected record") {
  for (const auto& e : list_entries()) {
    CAPTURE(e.name());
    LieAlgebra g = e.space.algebra();
    Record got = compute_record(g, e.space.base(g));
    CHECK(compare_records(e.expected(), got).empty());
    CHECK(got == e.expected());
  }
}

TEST_CASE("expected records against float flows and brute-force cosets") {
  for (const auto& e : list_entries()) {
    CAPTURE(e.name());
    LieAlgebra g = e.space.algebra();
    BasePoint z = e.space.base(g);
    auto found = find_admissible(g, z, 1, 10);
    REQUIRE(found.found);
    auto an = analyze(g, found.point.h_z);
    auto m = oracle::flow_match(g, an);
    CHECK(m.converged);
    CHECK(m.every_chamber_matched);
    const Record& x = e.expected();
    CHECK(m.cosets.size() == *x.w_order);
    CHECK(oracle::flow_cone(g, m) == Cone::from_inequalities(g.a_dim(), *x.cone_facets));
    CHECK(oracle::reflection_group_order(g, *x.sigma_Z) == *x.w_order);
    // a_h and the edge from first principles
    CHECK(g.to_a_coords(z.h_z.intersect(g.a())).dim() == *x.a_h_dim);
    CHECK(g.normalizer_in_a(z.h_z).dim() == *x.a_E_dim);
    // Sigma_Z vanishes on the edge
    Subspace edge = g.normalizer_in_a(z.h_z);
    for (const auto& r : *x.sigma_Z)
      for (const auto& v : edge.basis()) CHECK(sgn(g.evaluate(r, v)) == 0);
  }
}

TEST_CASE("non-adapted translates of G/Nbar") {
  for (const char* name : {"A1_nbar", "A2_nbar"}) {
    CAPTURE(name);
    const auto& e = find_entry(name);
    REQUIRE(e.translate);
    LieAlgebra g = e.space.algebra();
    BasePoint z = e.space.base(g);
    Subspace moved = translate(g, z.h_z, e.translate->word).h_z;
    CHECK(has_open_P_orbit(g, moved));
    CHECK_FALSE(is_adapted(g, moved));
    auto an = analyze(g, z.h_z);
    CHECK(cone_by_limits(g, moved, an.h_empty).cone == Cone::from_inequalities(g.a_dim(), e.translate->cone_facets));
  }
}

TEST_CASE("all invariant suites pass on the catalog") {
  for (const auto& e : list_entries())
    for (const auto& r : verify_catalog_entry(e, 20240611)) {
      CAPTURE(e.name());
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
}

TEST_CASE("n_t fallback on the half-space entries") {
  const auto& e = find_entry("A1T1_fz");
  LieAlgebra g = e.space.algebra();
  auto nt = nt_fallback(g, e.space.base(g), 8);
  CHECK_FALSE(nt.constant_family);
  CHECK(nt.success);
  CHECK(nt.t >= 1);
  CHECK(nt.t <= 8);
  // the group case has no a-component in any support: the family is constant
  const auto& d = find_entry("A1xA1_diag_w0");
  LieAlgebra gd = d.space.algebra();
  auto ntd = nt_fallback(gd, d.space.base(gd), 8);
  CHECK(ntd.constant_family);
  CHECK(ntd.success);
}

TEST_CASE("space files round-trip") {
  for (const auto& e : list_entries()) {
    CAPTURE(e.name());
    auto j = space_to_json(e.space);
    CHECK(j["schema_version"] == kSchemaVersion);
    auto back = space_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == e.space);
    CHECK(space_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("space file errors name the location") {
  auto j = space_to_json(find_entry("A1_so2").space);
  auto expect_error = [](const nlohmann::json& bad, const std::string& where) {
    try {
      LieAlgebra g = space_from_json(bad).algebra();
      (void)space_from_json(bad).base(g);
      FAIL("no error for " << where);
    } catch (const ParseError& err) {
      CHECK(std::string(err.what()).rfind(where, 0) == 0);
    }
  };
  auto bad = j;
  bad["subalgebra"][0][1] = "1/0";
  expect_error(bad, "/subalgebra/0/1");
  bad = j;
  bad["subalgebra"][0].erase(0);
  expect_error(bad, "/subalgebra/0");
  bad = j;
  bad["base_point"] = {{{"kind", "spin"}}};
  expect_error(bad, "/base_point/0/kind");
  bad = j;
  bad["lie_algebra"]["cartan_type"] = "Q3";
  expect_error(bad, "/lie_algebra");
  bad = j;
  bad["subalgebra"] = {{"1", "0", "0"}, {"0", "0", "1"}};
  expect_error(bad, "/subalgebra");
  bad = j;
  bad.erase("schema_version");
  expect_error(bad, "/");
  bad = j;
  bad["claims"]["w_order"] = "two";
  expect_error(bad, "/claims/w_order");
}

TEST_CASE("tampered claims fail with a diff") {
  SpaceDescription s = find_entry("A2_so3").space;
  CHECK(verify_claims(s).passed);
  s.claims->w_order = 3;
  auto r = verify_claims(s);
  CHECK_FALSE(r.passed);
  CHECK(r.detail == "w_order: claimed 3, computed 6");
}
