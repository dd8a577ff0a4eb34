#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lwg/verify.hpp"
#include "lwg/weyl.hpp"
#include "oracles.hpp"

#include <set>

using namespace lwg;

namespace {

Subspace theta_fixed(const LieAlgebra& g) {
  return Subspace::span(g.dim(), nullspace(g.theta_matrix() - Mat::identity(g.dim())));
}

Subspace span_of(const LieAlgebra& g, const std::vector<std::vector<std::pair<std::string, int>>>& rows) {
  auto labels = g.labels();
  std::vector<Vec> out;
  for (const auto& row : rows) {
    Vec v = zeros(g.dim());
    for (const auto& [lab, c] : row) v[std::find(labels.begin(), labels.end(), lab) - labels.begin()] += c;
    out.push_back(v);
  }
  return Subspace::span(g.dim(), out);
}

std::vector<std::string> labels_of(const LittleWeylGroup& w) {
  std::vector<std::string> out;
  for (const auto& e : w.elements) out.push_back(e.coset_label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("coxeter type labels") {
  CHECK(coxeter_type({}) == "trivial");
  CHECK(coxeter_type({{1}}) == "A1");
  CHECK(coxeter_type({{1, 3}, {3, 1}}) == "A2");
  CHECK(coxeter_type({{1, 4}, {4, 1}}) == "B2");
  CHECK(coxeter_type({{1, 6}, {6, 1}}) == "G2");
  CHECK(coxeter_type({{1, 5}, {5, 1}}) == "I2(5)");
  CHECK(coxeter_type({{1, 2}, {2, 1}}) == "A1xA1");
  CHECK(coxeter_type({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}) == "A3");
  CHECK(coxeter_type({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}) == "B3");
  CHECK(coxeter_type({{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}}) == "F4");
  CHECK(coxeter_type({{1, 3, 3, 3}, {3, 1, 2, 2}, {3, 2, 1, 2}, {3, 2, 2, 1}}) == "D4");
  // Coxeter matrices of Weyl groups computed from simple reflections
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "D4", "F4", "A1xA2"}) {
    CAPTURE(t);
    auto g = LieAlgebra::from_type(t);
    std::vector<std::vector<int>> m(g.rank(), std::vector<int>(g.rank()));
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (std::size_t k = 0; k < g.rank(); ++k)
        m[i][k] = matrix_order(simple_reflection_on_a(g, i) * simple_reflection_on_a(g, k));
    std::string expect = t;
    if (expect == "C3") expect = "B3";
    CHECK(coxeter_type(m) == expect);
  }
}

TEST_CASE("integer kernels are saturated") {
  Sampler rnd(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = rnd.integer(1, 4), rows = rnd.integer(0, n);
    std::vector<Vec> r;
    for (std::size_t i = 0; i < rows; ++i) r.push_back(rnd.vec(n, 3));
    Mat m = Mat::from_rows(r, n);
    auto ker = integer_kernel(m);
    CHECK(ker.size() == n - rank(m));
    for (const auto& k : ker) CHECK(is_zero(m * to_vec(k)));
    if (ker.empty()) continue;
    std::vector<Vec> cols;
    for (const auto& k : ker) cols.push_back(to_vec(k));
    Mat basis = Mat::from_columns(cols, n);
    // every kernel vector in a small box is an integer combination
    std::vector<long> x(n, -3);
    while (true) {
      IntVec xi(x.begin(), x.end());
      if (is_zero(m * to_vec(xi))) {
        auto c = solve(basis, to_vec(xi));
        REQUIRE(c);
        for (const auto& q : *c) CHECK(q.get_den() == 1);
      }
      std::size_t i = 0;
      while (i < n && x[i] == 3) x[i++] = -3;
      if (i == n) break;
      ++x[i];
    }
  }
}

TEST_CASE("trivial little Weyl group of G/Nbar") {
  auto g = LieAlgebra::from_type("A1");
  auto an = analyze(g, span_of(g, {{{"f1", 1}}}));
  auto w = little_weyl_group(g, an);
  CHECK(w.generators.empty());
  CHECK(w.order == 1);
  CHECK(w.coxeter_type == "trivial");
  CHECK(w.diagnostics.empty());
  CHECK(weyl_from_limits(g, an).cosets == std::vector<std::string>{"e"});
  auto sr = spherical_roots(g, w);
  CHECK(sr.roots.empty());
  CHECK(sr.lattice_basis.empty());
}

TEST_CASE("sl2 with compact and split one-dimensional subalgebras") {
  auto g = LieAlgebra::from_type("A1");
  for (auto h : {theta_fixed(g), span_of(g, {{{"e1", 1}, {"f1", 1}}})}) {
    auto an = analyze(g, h);
    auto w = little_weyl_group(g, an);
    REQUIRE(w.generators.size() == 1);
    CHECK(w.generators[0].witness == "root");
    CHECK(w.generators[0].beta == IntVec{1});
    CHECK(w.generators[0].word == IntVec{0});
    CHECK(w.order == 2);
    CHECK(w.coxeter_type == "A1");
    CHECK(w.diagnostics.empty());
    CHECK(w.tiling.disjoint);
    CHECK(w.tiling.covering);
    CHECK(w.tiling.sample_covered);
    CHECK(labels_of(w) == std::vector<std::string>{"e", "s1"});
    auto lim = weyl_from_limits(g, an);
    CHECK(lim.diagnostics.empty());
    CHECK(lim.cosets == labels_of(w));
    CHECK(lim.cosets == oracle::flow_match(g, an).cosets);
    auto sr = spherical_roots(g, w);
    CHECK(sr.roots == std::vector<IntVec>{{-1}, {1}});
    CHECK(sr.lattice_preserved);
    CHECK(sr.generates_w);
  }
}

TEST_CASE("twisted diagonal uses the orthogonal pair branch") {
  auto g = LieAlgebra::from_type("A1xA1");
  Subspace h = span_of(g, {{{"e1", 1}, {"f2", -1}}, {{"h1", 1}, {"h2", -1}}, {{"f1", 1}, {"e2", -1}}});
  auto an = analyze(g, h);
  auto w = little_weyl_group(g, an);
  REQUIRE(w.generators.size() == 1);
  const auto& gen = w.generators[0];
  CHECK(gen.witness == "pair");
  CHECK(gen.sigma == IntVec{1, 1});
  CHECK(gen.beta == IntVec{1, 0});
  CHECK(gen.gamma == IntVec{0, 1});
  CHECK(Subspace::span(2, {gen.a_h_witness}) == Subspace::span(2, {Vec{1, -1}}));
  CHECK(gen.on_a == Rational(-1) * Mat::identity(2));
  CHECK(w.order == 2);
  CHECK(w.coxeter_type == "A1");
  CHECK(w.a_E == Subspace::span(2, {Vec{1, -1}}));
  CHECK(w.diagnostics.empty());
  auto lim = weyl_from_limits(g, an);
  CHECK(lim.cosets == std::vector<std::string>{"e", "s1s2"});
  CHECK(lim.cosets == labels_of(w));
  CHECK(lim.cosets == oracle::flow_match(g, an).cosets);
  auto sr = spherical_roots(g, w);
  CHECK(sr.lattice_basis.size() == 1);
  CHECK(sr.roots == std::vector<IntVec>{{-1, -1}, {1, 1}});
}

TEST_CASE("sl3/so3 gives type A2") {
  auto g = LieAlgebra::from_type("A2");
  auto an = analyze(g, theta_fixed(g));
  CHECK(an.indecomposables == std::vector<IntVec>{{0, 2}, {2, 0}});
  auto w = little_weyl_group(g, an);
  REQUIRE(w.generators.size() == 2);
  std::set<IntVec> betas;
  for (const auto& gen : w.generators) {
    CHECK(gen.witness == "root");
    betas.insert(gen.beta);
  }
  CHECK(betas == std::set<IntVec>{{1, 0}, {0, 1}});
  CHECK(w.order == 6);
  CHECK(w.coxeter_type == "A2");
  CHECK(w.diagnostics.empty());
  CHECK(w.tiling.disjoint);
  CHECK(w.tiling.covering);
  CHECK(w.tiling.certificate_chambers == 6);
  auto lim = weyl_from_limits(g, an);
  CHECK(lim.diagnostics.empty());
  CHECK(lim.cosets.size() == 6);
  CHECK(lim.cosets == labels_of(w));
  CHECK(lim.cosets == oracle::flow_match(g, an).cosets);
  auto sr = spherical_roots(g, w);
  CHECK(sr.roots.size() == 6);
  for (const auto& r : sr.roots) CHECK(g.root_system().is_root(r));
  CHECK(sr.generates_w);
  CHECK(sr.roots_permuted);
}

TEST_CASE("degenerations at walls have order two") {
  auto g = LieAlgebra::from_type("A2");
  auto an = analyze(g, theta_fixed(g));
  auto w = little_weyl_group(g, an);
  Cone c = compression_cone(g, an);
  for (const auto& wall : c.walls()) {
    auto d = boundary_degeneration(g, an, wall);
    auto an2 = analyze(g, d.h_zF);
    CHECK(an2.a_h == an.a_h);
    auto w2 = little_weyl_group(g, an2);
    REQUIRE(w2.order == 2);
    bool matches = false;
    for (const auto& gen : w.generators)
      if (gen.wall == wall) matches = gen.on_quotient == w2.generators.at(0).on_quotient;
    CHECK(matches);
  }
}
