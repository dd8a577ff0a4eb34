#include "lwg/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lwg {

namespace {

struct Generators {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

// Component of r orthogonal (standard dot product) to span(basis).
Vec project_off(const std::vector<Vec>& basis, const Vec& r) {
  if (basis.empty()) return r;
  const std::size_t k = basis.size();
  Mat gram(k, k);
  Vec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], r);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  }
  Vec c = *solve(gram, rhs);
  Vec out = r;
  for (std::size_t i = 0; i < k; ++i) axpy(out, -c[i], basis[i]);
  return out;
}

std::vector<Vec> canonical_rays(const std::vector<Vec>& rays, const std::vector<Vec>& lineality) {
  std::set<Vec> seen;
  std::vector<Vec> out;
  for (const auto& r : rays) {
    Vec p = primitive(project_off(lineality, r));
    if (is_zero(p)) continue;
    if (seen.insert(p).second) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Incremental double description of {x : gamma(x) <= 0 for all constraints}.
Generators double_description(std::size_t n, const std::vector<Vec>& constraints) {
  std::vector<Vec> lin;
  for (std::size_t i = 0; i < n; ++i) lin.push_back(unit(n, i));
  std::vector<Vec> rays, processed;
  for (const auto& gamma : constraints) {
    if (is_zero(gamma)) continue;
    processed.push_back(gamma);
    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const Vec& l) { return sgn(dot(gamma, l)) != 0; });
    if (pivot != lin.end()) {
      Vec l = *pivot;
      lin.erase(pivot);
      Rational gl = dot(gamma, l);
      if (sgn(gl) > 0) {
        l = scale(-1, l);
        gl = -gl;
      }
      for (auto& v : lin) axpy(v, -dot(gamma, v) / gl, l);
      for (auto& r : rays) axpy(r, -dot(gamma, r) / gl, l);
      rays.push_back(l);
    } else {
      std::vector<Vec> pos, next;
      for (const auto& r : rays) {
        int s = sgn(dot(gamma, r));
        if (s > 0) pos.push_back(r);
        else next.push_back(r);
      }
      std::vector<Vec> neg;
      for (const auto& r : rays)
        if (sgn(dot(gamma, r)) < 0) neg.push_back(r);
      for (const auto& p : pos)
        for (const auto& q : neg) {
          Vec r = sub(scale(dot(gamma, p), q), scale(dot(gamma, q), p));
          next.push_back(r);
        }
      rays = std::move(next);
    }
    // keep extreme rays only: the tight constraints must cut out a line modulo lineality
    rays = canonical_rays(rays, lin);
    const std::size_t need = n - lin.size() - 1;
    std::vector<Vec> kept;
    for (const auto& r : rays) {
      std::vector<Vec> tight;
      for (const auto& c : processed)
        if (sgn(dot(c, r)) == 0) tight.push_back(c);
      if (rank(tight, n) == need) kept.push_back(r);
    }
    rays = std::move(kept);
  }
  Subspace l = Subspace::span(n, lin);
  return {canonical_rays(rays, l.basis()), l.basis()};
}

std::vector<Vec> with_both_signs(std::vector<Vec> base, const std::vector<Vec>& lin) {
  for (const auto& l : lin) {
    base.push_back(l);
    base.push_back(scale(-1, l));
  }
  return base;
}

}  // namespace

Vec normalize_direction(const Vec& v) {
  Vec p = primitive(v);
  for (const auto& x : p)
    if (sgn(x) != 0) {
      if (sgn(x) < 0) p = scale(-1, p);
      break;
    }
  return p;
}

Cone::Cone(std::size_t ambient) : n_(ambient), lineality_(ambient), span_(ambient) {
  for (std::size_t i = 0; i < n_; ++i) equations_.push_back(unit(n_, i));
}

Cone Cone::whole(std::size_t ambient) { return from_inequalities(ambient, {}); }

Cone Cone::from_inequalities(std::size_t ambient, const std::vector<Vec>& gammas) {
  for (const auto& g : gammas)
    if (g.size() != ambient) throw std::invalid_argument("cone: functional of wrong length");
  Cone c(ambient);
  Generators v = double_description(ambient, gammas);
  c.rays_ = v.rays;
  c.lineality_ = Subspace::span(ambient, v.lineality);
  c.finish_from_generators();
  return c;
}

Cone Cone::from_generators(std::size_t ambient, const std::vector<Vec>& rays, const std::vector<Vec>& lineality) {
  for (const auto& r : rays)
    if (r.size() != ambient) throw std::invalid_argument("cone: generator of wrong length");
  Generators polar = double_description(ambient, with_both_signs(rays, lineality));
  Generators v = double_description(ambient, with_both_signs(polar.rays, polar.lineality));
  Cone c(ambient);
  c.rays_ = v.rays;
  c.lineality_ = Subspace::span(ambient, v.lineality);
  c.finish_from_generators();
  return c;
}

void Cone::finish_from_generators() {
  Generators polar = double_description(n_, with_both_signs(rays_, lineality_.basis()));
  facets_ = polar.rays;
  equations_ = polar.lineality;
  span_ = lineality_ + Subspace::span(n_, rays_);
}

std::vector<Vec> Cone::inequalities() const { return with_both_signs(facets_, equations_); }

bool Cone::contains(const Vec& x) const {
  for (const auto& f : facets_)
    if (sgn(dot(f, x)) > 0) return false;
  for (const auto& e : equations_)
    if (sgn(dot(e, x)) != 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_.basis())
    if (!contains(l) || !contains(scale(-1, l))) return false;
  return true;
}

bool Cone::contains_relative_interior(const Vec& x) const {
  for (const auto& f : facets_)
    if (sgn(dot(f, x)) >= 0) return false;
  for (const auto& e : equations_)
    if (sgn(dot(e, x)) != 0) return false;
  return true;
}

Vec Cone::interior_point() const {
  Vec p = zeros(n_);
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

Cone Cone::dual() const {
  std::vector<Vec> gens;
  for (const auto& f : facets_) gens.push_back(scale(-1, f));
  return from_generators(n_, gens, equations_);
}

std::vector<Cone> Cone::faces() const {
  using RaySet = std::vector<std::size_t>;
  RaySet all(rays_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<RaySet> seen{all};
  std::vector<RaySet> queue{all};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    RaySet cur = queue[head];
    for (const auto& f : facets_) {
      RaySet sub;
      for (auto i : cur)
        if (sgn(dot(f, rays_[i])) == 0) sub.push_back(i);
      if (sub.size() == cur.size()) continue;
      if (seen.insert(sub).second) queue.push_back(sub);
    }
  }
  std::vector<Cone> out;
  for (const auto& s : queue) {
    std::vector<Vec> gens;
    for (auto i : s) gens.push_back(rays_[i]);
    out.push_back(from_generators(n_, gens, lineality_.basis()));
  }
  std::stable_sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) { return a.dim() > b.dim(); });
  return out;
}

std::vector<Cone> Cone::walls() const {
  std::vector<Cone> out;
  for (auto& f : faces())
    if (f.dim() + 1 == n_) out.push_back(f);
  return out;
}

Cone Cone::intersect(const Cone& other) const {
  auto a = inequalities(), b = other.inequalities();
  a.insert(a.end(), b.begin(), b.end());
  return from_inequalities(n_, a);
}

Cone Cone::image(const Mat& m) const {
  if (m.cols() != n_) throw std::invalid_argument("cone image: matrix of wrong width");
  std::vector<Vec> gens, lin;
  for (const auto& r : rays_) gens.push_back(m * r);
  for (const auto& l : lineality_.basis()) lin.push_back(m * l);
  return from_generators(m.rows(), gens, lin);
}

Cone Cone::plus(const Subspace& v) const {
  std::vector<Vec> lin = lineality_.basis();
  lin.insert(lin.end(), v.basis().begin(), v.basis().end());
  return from_generators(n_, rays_, lin);
}

std::optional<Vec> strictly_negative_point(std::size_t ambient, const std::vector<Vec>& gammas) {
  for (const auto& g : gammas)
    if (is_zero(g)) return std::nullopt;
  Cone c = Cone::from_inequalities(ambient, gammas);
  if (!c.is_full_dimensional()) return std::nullopt;
  Vec p = c.interior_point();
  for (const auto& g : gammas)
    if (sgn(dot(g, p)) >= 0) throw ContractError("strictly_negative_point: interior point fails a constraint");
  return p;
}

ChamberSet enumerate_chambers(std::size_t ambient, const std::vector<Vec>& hyperplanes) {
  ChamberSet out;
  std::set<Vec> seen;
  for (const auto& h : hyperplanes) {
    if (h.size() != ambient) throw std::invalid_argument("chambers: functional of wrong length");
    if (is_zero(h)) throw std::invalid_argument("chambers: zero functional");
    Vec d = normalize_direction(h);
    if (seen.insert(d).second) out.hyperplanes.push_back(d);
  }
  const auto& hs = out.hyperplanes;
  const std::size_t m = hs.size();

  // seed on the moment curve, off every hyperplane
  Vec seed;
  for (long t = 1;; ++t) {
    seed = Vec(ambient);
    Rational p = 1;
    for (auto& x : seed) {
      x = p;
      p *= t;
    }
    bool generic = true;
    for (const auto& h : hs) generic = generic && sgn(dot(h, seed)) != 0;
    if (generic) break;
  }
  std::vector<int> root(m);
  for (std::size_t i = 0; i < m; ++i) root[i] = sgn(dot(hs[i], seed));

  struct Info {
    std::vector<std::size_t> facets;
    Vec point;
  };
  auto info = [&](const std::vector<int>& s) -> std::optional<Info> {
    std::vector<Vec> gam;
    for (std::size_t i = 0; i < m; ++i) gam.push_back(scale(-s[i], hs[i]));
    Cone c = Cone::from_inequalities(ambient, gam);
    if (!c.is_full_dimensional()) return std::nullopt;
    Info in;
    for (const auto& f : c.facets()) {
      Vec d = normalize_direction(f);
      for (std::size_t i = 0; i < m; ++i)
        if (hs[i] == d) in.facets.push_back(i);
    }
    std::sort(in.facets.begin(), in.facets.end());
    in.point = primitive(c.interior_point());
    return in;
  };
  auto parent = [&](const std::vector<int>& s, const Info& in) -> std::optional<std::vector<int>> {
    for (auto i : in.facets)
      if (s[i] != root[i]) {
        auto p = s;
        p[i] = -p[i];
        return p;
      }
    return std::nullopt;
  };

  std::vector<std::pair<std::vector<int>, Info>> stack;
  stack.emplace_back(root, *info(root));
  while (!stack.empty()) {
    auto [s, in] = std::move(stack.back());
    stack.pop_back();
    out.chambers.push_back({s, in.point});
    for (auto i : in.facets) {
      auto c = s;
      c[i] = -c[i];
      auto ci = info(c);
      if (!ci) throw ContractError("chambers: flip across a facet is empty");
      auto p = parent(c, *ci);
      if (p && *p == s) stack.emplace_back(c, std::move(*ci));
    }
  }
  std::sort(out.chambers.begin(), out.chambers.end(),
            [](const Chamber& a, const Chamber& b) { return a.signs < b.signs; });
  return out;
}

}  // namespace lwg
