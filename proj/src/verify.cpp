#include "lwg/verify.hpp"

#include "lwg/group_elements.hpp"
#include "lwg/limits.hpp"

#include <algorithm>
#include <sstream>

namespace lwg {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Sampler::rational(long bound) {
  Rational q(integer(-bound, bound), integer(1, 3));
  q.canonicalize();
  return q;
}

Vec Sampler::vec(std::size_t n, long bound) {
  Vec v(n);
  for (auto& x : v) x = integer(-bound, bound);
  return v;
}

Subspace Sampler::subspace(std::size_t n, std::size_t k) {
  while (true) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(vec(n, 3));
    Subspace s = Subspace::span(n, rows);
    if (s.dim() == k) return s;
  }
}

Subspace Sampler::subalgebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto& roots = g.root_system().roots();
  Subspace base(n);
  switch (integer(0, 5)) {
    case 0: base = g.nbar(); break;
    case 1: base = g.a() + g.nbar(); break;
    case 2: base = g.a(); break;
    case 3: base = g.n(); break;
    case 4: {
      std::size_t k = integer(0, static_cast<long>(g.root_system().positive_roots().size()) - 1);
      std::size_t kn = g.root_system().negative_of(k);
      base = Subspace::span(n, {unit(n, g.root_vector(k)), unit(n, g.root_vector(kn)),
                                g.embed_a(g.cartan_coroot(roots[k]))});
      break;
    }
    default: {
      std::size_t k = integer(0, static_cast<long>(roots.size()) - 1);
      base = Subspace::span(n, {unit(n, g.root_vector(k))});
    }
  }
  Subspace e = base;
  long steps = integer(1, 3);
  for (long s = 0; s < steps; ++s) {
    switch (integer(0, 2)) {
      case 0: {
        IntVec word;
        for (long j = integer(0, 3); j > 0; --j) word.push_back(integer(0, static_cast<long>(g.rank()) - 1));
        e = e.image(weyl_lift(g, word).adjoint_lift);
        break;
      }
      case 1: {
        std::size_t k = integer(0, static_cast<long>(roots.size()) - 1);
        Rational c = rational(2);
        e = e.image(nilpotent_action(g, scale(c, unit(n, g.root_vector(k)))));
        break;
      }
      default: {
        Vec q(g.rank());
        for (auto& x : q) x = integer(1, 3) * (integer(0, 1) ? 1 : -1);
        e = e.image(torus_action(g, q));
      }
    }
  }
  return e;
}

namespace {

std::string describe_instance(const LieAlgebra& g, const std::string& type, const Subspace& e, const Vec& x) {
  std::ostringstream os;
  os << type << " X=" << to_string(x) << " E={";
  for (const auto& v : e.basis()) os << g.describe(v) << "; ";
  os << "}";
  return os.str();
}

// Y order-regular with X in the closure of the chamber of Y.
Vec chamber_point(const LieAlgebra& g, const Vec& x, const Vec& z, long extra) {
  auto hyper = order_regular_hyperplanes(g);
  Rational zmax = 0, xmin = 0;
  for (const auto& h : hyper) {
    Rational zx = abs(g.evaluate(h, z)), xx = abs(g.evaluate(h, x));
    zmax = std::max(zmax, zx);
    if (sgn(xx) != 0 && (sgn(xmin) == 0 || xx < xmin)) xmin = xx;
  }
  Rational factor = sgn(xmin) == 0 ? Rational(1) : Rational(zmax / xmin + 1 + extra);
  return add(scale(factor, x), z);
}

}  // namespace

CheckResult verify_limit_suite(std::uint64_t seed, std::size_t instances) {
  CheckResult res;
  res.name = "limit formula: invariants and flow oracle";
  Sampler rnd(seed);
  const std::vector<std::pair<std::string, std::size_t>> types = {
      {"A1", 0}, {"A1", 1}, {"A2", 0}, {"B2", 0}, {"G2", 0}, {"A1xA1", 0}};
  std::vector<LieAlgebra> algebras;
  for (const auto& [t, c] : types) algebras.push_back(LieAlgebra::from_type(t, c));

  for (std::size_t inst = 0; inst < instances; ++inst) {
    std::size_t which = inst % algebras.size();
    const LieAlgebra& g = algebras[which];
    const std::size_t n = g.dim();
    Subspace e = rnd.integer(0, 1) ? rnd.subalgebra(g) : rnd.subspace(n, rnd.integer(1, static_cast<long>(n) - 1));
    Vec x = rnd.vec(g.a_dim(), 2);
    std::string where = describe_instance(g, types[which].first, e, x);
    ++res.cases;
    try {
      Subspace lim = limit_subspace(g, e, x);
      if (lim.dim() != e.dim()) res.fail("dimension: " + where);
      if (g.is_subalgebra(e) && !g.is_subalgebra(lim)) res.fail("subalgebra closure: " + where);
      if (is_order_regular(g, x) && g.normalizer_in_a(lim).dim() != g.a_dim()) res.fail("a-stability: " + where);

      Vec z;
      do z = rnd.vec(g.a_dim(), 5);
      while (!is_order_regular(g, z));
      Vec y1 = chamber_point(g, x, z, 0), y2 = chamber_point(g, x, z, 3);
      if (!is_order_regular(g, y1) || !is_order_regular(g, y2)) res.fail("chamber point construction: " + where);
      Subspace ey = limit_subspace(g, e, y1);
      if (limit_subspace(g, lim, y1) != ey) res.fail("chamber constancy (E_X)_Y = E_Y: " + where);
      if (limit_subspace(g, e, y2) != ey) res.fail("chamber constancy E_Y = E_Y': " + where);

      // conjugation: nilpotent element supported on roots with beta(X) <= 0
      const auto& roots = g.root_system().roots();
      bool positive = rnd.integer(0, 1) == 1;
      Vec nil = zeros(n), nil0 = zeros(n);
      for (std::size_t k = 0; k < roots.size(); ++k) {
        if (g.root_system().is_positive(k) != positive) continue;
        Rational v = g.evaluate(roots[k], x);
        if (sgn(v) > 0) continue;
        Rational c = rnd.rational(2);
        nil[g.root_vector(k)] = c;
        if (sgn(v) == 0) nil0[g.root_vector(k)] = c;
      }
      Subspace lhs = limit_subspace(g, e.image(nilpotent_action(g, nil)), x);
      Subspace rhs = lim.image(nilpotent_action(g, nil0));
      if (lhs != rhs) res.fail("conjugation compatibility: " + where);

      FlowReport flow = float_flow_oracle(g, e, x, 40.0, 1e-6);
      if (!flow.converged || flow.distance >= 1e-6)
        res.fail("flow oracle distance " + std::to_string(flow.distance) + ": " + where);
    } catch (const std::exception& ex) {
      res.fail(std::string("exception ") + ex.what() + ": " + where);
    }
  }
  return res;
}

}  // namespace lwg
