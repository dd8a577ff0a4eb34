#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lwg/limits.hpp"
#include "lwg/verify.hpp"

using namespace lwg;

namespace {

Vec basis_vec(const LieAlgebra& g, const std::string& label) {
  auto l = g.labels();
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] == label) return unit(g.dim(), i);
  throw std::runtime_error("no basis vector " + label);
}

}  // namespace

TEST_CASE("graded direction projections") {
  auto g = LieAlgebra::from_type("A2");
  auto d = GradedDirection::of(g, Vec{1, 2});
  Mat sum(g.dim(), g.dim());
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    Mat p = d.projection(i, g.dim());
    sum = sum + p;
    CHECK(p * p == p);
    for (std::size_t j = 0; j < d.blocks.size(); ++j)
      if (i != j) CHECK((p * d.projection(j, g.dim())).is_zero());
  }
  CHECK(sum == Mat::identity(g.dim()));
  for (std::size_t i = 1; i < d.eigenvalues.size(); ++i) CHECK(d.eigenvalues[i - 1] < d.eigenvalues[i]);
  Mat adx = g.ad(g.embed_a(Vec{1, 2}));
  Mat rebuilt(g.dim(), g.dim());
  for (std::size_t i = 0; i < d.blocks.size(); ++i) rebuilt = rebuilt + d.eigenvalues[i] * d.projection(i, g.dim());
  CHECK(rebuilt == adx);
}

TEST_CASE("limit examples in sl2 and sl3") {
  auto g = LieAlgebra::from_type("A1");
  Vec e = basis_vec(g, "e1"), f = basis_vec(g, "f1");
  Subspace lf = Subspace::span(3, {f});
  CHECK(limit_subspace(g, lf, Vec{1}) == lf);
  CHECK(limit_subspace(g, lf, Vec{-1}) == lf);
  Subspace epf = Subspace::span(3, {add(e, f)});
  CHECK(limit_subspace(g, epf, Vec{1}) == Subspace::span(3, {e}));
  CHECK(limit_subspace(g, epf, Vec{-1}) == lf);
  CHECK(limit_subspace(g, epf, Vec{0}) == epf);

  // alpha1(X) = alpha2(X): the sum of the two root vectors is a fixed line
  auto a2 = LieAlgebra::from_type("A2");
  Vec x{1, 1};
  CHECK(a2.evaluate({1, 0}, x) == a2.evaluate({0, 1}, x));
  Subspace s = Subspace::span(8, {add(basis_vec(a2, "e1"), basis_vec(a2, "e2"))});
  CHECK(limit_subspace(a2, s, x) == s);
  CHECK(a2.normalizer_in_a(s).dim() == 1);
}

TEST_CASE("order-regularity") {
  auto g = LieAlgebra::from_type("A1");
  CHECK(is_order_regular(g, Vec{1}));
  CHECK_FALSE(is_order_regular(g, Vec{0}));
  auto a2 = LieAlgebra::from_type("A2");
  CHECK_FALSE(is_order_regular(a2, Vec{1, 1}));
  CHECK(is_order_regular(a2, Vec{1, 3}));
  CHECK(order_regular_hyperplanes(g).size() == 1);
  // pairwise differences of A2 roots up to scale
  for (const auto& h : order_regular_hyperplanes(a2)) CHECK(a2.functional(h) != zeros(2));
}

TEST_CASE("flow oracle examples") {
  auto g = LieAlgebra::from_type("A1");
  Vec e = basis_vec(g, "e1"), f = basis_vec(g, "f1");
  auto r = float_flow_oracle(g, Subspace::span(3, {add(e, f)}), Vec{1}, 20.0, 1e-8);
  CHECK(r.converged);
  CHECK(r.distance < 1e-8);
  CHECK(float_flow_oracle(g, Subspace::span(3, {f}), Vec{1}, 20.0, 1e-8).distance < 1e-12);
  auto a2 = LieAlgebra::from_type("A2");
  Subspace s = Subspace::span(8, {add(basis_vec(a2, "e1"), basis_vec(a2, "f2")), basis_vec(a2, "h1")});
  CHECK(float_flow_oracle(a2, s, Vec{0, 0}, 20.0, 1e-8).distance < 1e-12);
  // the distance separates different lines
  CHECK(principal_angle_distance(Subspace::span(3, {e}), r.frame) < 1e-8);
  CHECK(principal_angle_distance(Subspace::span(3, {f}), r.frame) > 0.99);
  // a small gap is reported as non-convergence
  CHECK_FALSE(float_flow_oracle(g, Subspace::span(3, {add(e, f)}), Vec{Rational(1, 1000)}, 5.0, 1e-6).converged);
}

TEST_CASE("seeded random limit suite") {
  auto res = verify_limit_suite(20240611, 240);
  INFO(res.detail);
  CHECK(res.passed);
  CHECK(res.cases == 240);
}
