#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lwg/cone.hpp"
#include "lwg/limits.hpp"
#include "lwg/verify.hpp"

#include <set>

using namespace lwg;

namespace {

// Distinct sign vectors over the integer grid [-r, r]^d, skipping points on a hyperplane.
std::size_t grid_chamber_count(std::size_t d, const std::vector<Vec>& hs, long r) {
  std::set<std::vector<int>> found;
  std::vector<long> x(d, -r);
  while (true) {
    std::vector<int> s;
    bool off = true;
    for (const auto& h : hs) {
      Rational v = 0;
      for (std::size_t i = 0; i < d; ++i) v += h[i] * x[i];
      if (sgn(v) == 0) off = false;
      s.push_back(sgn(v));
    }
    if (off) found.insert(s);
    std::size_t i = 0;
    while (i < d && x[i] == r) x[i++] = -r;
    if (i == d) break;
    ++x[i];
  }
  return found.size();
}

// Every sign vector tested for a nonempty open region.
std::size_t brute_force_chamber_count(std::size_t d, const std::vector<Vec>& hs) {
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << hs.size()); ++mask) {
    std::vector<Vec> gam;
    for (std::size_t i = 0; i < hs.size(); ++i) gam.push_back(scale((mask >> i) & 1 ? 1 : -1, hs[i]));
    if (strictly_negative_point(d, gam)) ++count;
  }
  return count;
}

std::vector<Vec> order_regular_functionals(const LieAlgebra& g) {
  std::vector<Vec> out;
  for (const auto& h : order_regular_hyperplanes(g)) out.push_back(g.functional(h));
  return out;
}

}  // namespace

TEST_CASE("cones from inequalities") {
  Cone c = Cone::from_inequalities(1, {Vec{2}});
  CHECK(c.rays() == std::vector<Vec>{Vec{-1}});
  CHECK(c.lineality().dim() == 0);
  Cone w = Cone::from_inequalities(2, {});
  CHECK(w.lineality().dim() == 2);
  CHECK(w.rays().empty());
  CHECK(w == Cone::whole(2));
  Cone q = Cone::from_inequalities(2, {Vec{1, 0}, Vec{0, 1}});
  CHECK(q.rays() == std::vector<Vec>{Vec{-1, 0}, Vec{0, -1}});
  CHECK(q.contains(Vec{-1, -5}));
  CHECK_FALSE(q.contains(Vec{1, -5}));
  CHECK(q.contains_interior(Vec{-1, -5}));
  CHECK_FALSE(q.contains_interior(Vec{0, -5}));
  // redundant inequalities are dropped from the facet list
  Cone r = Cone::from_inequalities(2, {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}, Vec{2, 0}});
  CHECK(r == q);
  CHECK(r.facets().size() == 2);
  // non-full-dimensional cone carries equations
  Cone line = Cone::from_inequalities(2, {Vec{1, 1}, Vec{-1, -1}});
  CHECK(line.dim() == 1);
  CHECK(line.equations().size() == 1);
  CHECK(line.lineality().dim() == 1);
}

TEST_CASE("dual cones") {
  CHECK(Cone::whole(2).dual().dim() == 0);
  Cone half = Cone::from_inequalities(1, {Vec{1}});
  Cone hd = half.dual();
  CHECK(hd.rays() == std::vector<Vec>{Vec{-1}});
  Cone q = Cone::from_inequalities(2, {Vec{1, 0}, Vec{0, 1}});
  CHECK(q.dual() == Cone::from_generators(2, {Vec{-1, 0}, Vec{0, -1}}));
  CHECK(q.dual().dual() == q);
  CHECK(Cone(3).dual() == Cone::whole(3));
}

TEST_CASE("faces, walls, edge") {
  Cone half = Cone::from_inequalities(1, {Vec{1}});
  CHECK(half.faces().size() == 2);
  REQUIRE(half.walls().size() == 1);
  CHECK(half.walls()[0].dim() == 0);
  CHECK(half.edge().dim() == 0);
  Cone w = Cone::whole(2);
  CHECK(w.faces().size() == 1);
  CHECK(w.walls().empty());
  CHECK(w.edge().dim() == 2);
  Cone hp = Cone::from_inequalities(2, {Vec{1, 1}});
  REQUIRE(hp.walls().size() == 1);
  Subspace line = Subspace::span(2, {Vec{1, -1}});
  CHECK(hp.walls()[0].linear_span() == line);
  CHECK(hp.edge() == line);
  Cone q = Cone::from_inequalities(2, {Vec{1, 0}, Vec{0, 1}});
  CHECK(q.faces().size() == 4);
  CHECK(q.walls().size() == 2);
}

TEST_CASE("random cones: double description and face lattice consistency") {
  Sampler rnd(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = rnd.integer(1, 4);
    std::vector<Vec> gam;
    for (long k = rnd.integer(0, 6); k > 0; --k) gam.push_back(rnd.vec(d, 3));
    Cone c = Cone::from_inequalities(d, gam);
    CAPTURE(trial);
    for (const auto& g : gam)
      for (const auto& r : c.rays()) CHECK(sgn(dot(g, r)) <= 0);
    CHECK(Cone::from_inequalities(d, c.inequalities()) == c);
    CHECK(Cone::from_generators(d, c.rays(), c.lineality().basis()) == c);
    CHECK(c.dual().dual() == c);
    // edge = lineality = C cap -C
    std::vector<Vec> neg;
    for (const auto& g : c.inequalities()) neg.push_back(scale(-1, g));
    CHECK(c.intersect(Cone::from_inequalities(d, neg)).linear_span() == c.edge());
    auto faces = c.faces();
    for (const auto& f : faces) CHECK(f.linear_span().contains(c.edge()));
    // each wall of a full-dimensional cone lies on exactly one facet hyperplane
    if (c.is_full_dimensional()) {
      for (const auto& wall : c.walls()) {
        std::size_t bounding = 0;
        for (const auto& fct : c.facets()) {
          bool all = true;
          for (const auto& r : wall.rays()) all = all && sgn(dot(fct, r)) == 0;
          for (const auto& l : wall.lineality().basis()) all = all && sgn(dot(fct, l)) == 0;
          if (all) ++bounding;
        }
        CHECK(bounding == 1);
      }
    }
    // strictly feasible points really satisfy the strict system
    if (auto p = strictly_negative_point(d, gam))
      for (const auto& g : gam) CHECK(sgn(dot(g, *p)) < 0);
  }
}

TEST_CASE("chambers of small arrangements") {
  CHECK(enumerate_chambers(1, {Vec{3}}).chambers.size() == 2);
  auto a1 = LieAlgebra::from_type("A1");
  CHECK(enumerate_chambers(1, order_regular_functionals(a1)).chambers.size() == 2);
  CHECK_THROWS_AS(enumerate_chambers(2, {Vec{0, 0}}), std::invalid_argument);
  CHECK(enumerate_chambers(2, {}).chambers.size() == 1);
  // non-essential arrangement
  CHECK(enumerate_chambers(3, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{2, 0, 0}}).chambers.size() == 4);
}

TEST_CASE("reverse search agrees with grid sampling and brute force") {
  for (const char* t : {"A2", "B2", "G2", "A1xA1"}) {
    CAPTURE(t);
    auto g = LieAlgebra::from_type(t);
    auto hs = order_regular_functionals(g);
    auto cs = enumerate_chambers(g.a_dim(), hs);
    CHECK(cs.chambers.size() == grid_chamber_count(g.a_dim(), cs.hyperplanes, 60));
    if (cs.hyperplanes.size() <= 12) CHECK(cs.chambers.size() == brute_force_chamber_count(g.a_dim(), cs.hyperplanes));
    for (const auto& ch : cs.chambers)
      for (std::size_t i = 0; i < cs.hyperplanes.size(); ++i)
        CHECK(sgn(dot(cs.hyperplanes[i], ch.point)) == ch.signs[i]);
    for (const auto& ch : cs.chambers) CHECK(is_order_regular(g, ch.point));
  }
  for (const char* t : {"A3", "A1xA2"}) {
    CAPTURE(t);
    auto g = LieAlgebra::from_type(t);
    auto cs = enumerate_chambers(g.a_dim(), order_regular_functionals(g));
    CHECK(cs.chambers.size() == grid_chamber_count(g.a_dim(), cs.hyperplanes, 14));
  }
}
