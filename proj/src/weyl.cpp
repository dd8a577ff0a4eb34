#include "lwg/weyl.hpp"

#include "lwg/limits.hpp"
#include "lwg/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lwg {

namespace {

std::vector<std::string> key_of(const Mat& m) {
  std::vector<std::string> k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(to_string(m(i, j)));
  return k;
}

std::vector<std::string> key_of(const Vec& v) { return to_strings(v); }

// X -> X - rho(X) rho-check on a-coordinates.
Mat reflection_on_a(const LieAlgebra& g, const IntVec& rho) {
  Vec f = g.functional(rho), c = g.cartan_coroot(rho);
  Mat m = Mat::identity(g.a_dim());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= c[i] * f[j];
  return m;
}

// Matrix of w on the subspace s (w must preserve s), in its echelon basis.
std::optional<Mat> restrict_to(const Subspace& s, const Mat& w) {
  std::vector<Vec> cols;
  for (const auto& b : s.basis()) {
    Vec wb = w * b;
    if (!s.contains(wb)) return std::nullopt;
    cols.push_back(s.coordinates(wb));
  }
  return Mat::from_columns(cols, s.dim());
}

std::optional<IntVec> halve(const IntVec& v) {
  IntVec h(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] % 2 != 0) return std::nullopt;
    h[i] = v[i] / 2;
  }
  return h;
}

IntVec sub_int(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVec neg_int(const IntVec& a) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

Mat gram_on(const LieAlgebra& g, const std::vector<Vec>& basis) {
  Mat gram = g.form_on_a();
  Mat out(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) out(i, j) = dot(basis[i], gram * basis[j]);
  return out;
}

// Coordinates along the a_circ basis of the B-orthogonal projection a -> a_circ.
Mat projection_to_a_circ(const SphericalAnalysis& an) {
  std::vector<Vec> cols = an.a_circ.basis();
  for (const auto& b : an.a_h.basis()) cols.push_back(b);
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  auto inv = inverse(Mat::from_columns(cols, n));
  if (!inv) throw ContractError("a_circ and a_h are not complementary");
  Mat p(an.a_circ.dim(), n);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = (*inv)(i, j);
  return p;
}

}  // namespace

CosetTable::CosetTable(const LieAlgebra& g, const std::vector<std::size_t>& sigma0) {
  elements_ = weyl_group_elements(g);
  const std::size_t r = g.rank(), n = g.a_dim();
  std::set<std::size_t> j(sigma0.begin(), sigma0.end());
  Mat sys(n, n);
  Vec rhs = zeros(n);
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    Vec f = g.functional(e);
    for (std::size_t k = 0; k < n; ++k) sys(i, k) = f[k];
    rhs[i] = j.count(i) ? 0 : 1;
  }
  for (std::size_t c = 0; c < g.center_dim(); ++c) sys(r + c, r + c) = 1;
  auto x = solve(sys, rhs);
  if (!x) throw ContractError("coset table: no dominant point for the parabolic subsystem");
  x_j_ = *x;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    coset_.emplace(key_of(elements_[i].action_on_a * x_j_), i);
    element_.emplace(key_of(elements_[i].action_on_a), i);
  }
}

const WeylElement& CosetTable::representative(const Mat& w_on_a) const {
  auto it = coset_.find(key_of(w_on_a * x_j_));
  if (it == coset_.end()) throw ContractError("coset table: matrix is not a Weyl group element");
  return elements_[it->second];
}

std::optional<std::size_t> CosetTable::find(const Mat& w_on_a) const {
  auto it = element_.find(key_of(w_on_a));
  if (it == element_.end()) return std::nullopt;
  return it->second;
}

WallGenerator wall_reflection(const LieAlgebra& g, const SphericalAnalysis& an, const Cone& wall, const CosetTable& table) {
  const auto& rs = g.root_system();
  const Subspace& span = wall.linear_span();
  if (span.dim() + 1 != g.a_dim()) throw std::invalid_argument("wall_reflection: not a wall");
  Subspace fixed = span.intersect(an.a_circ);

  auto check = [&](const Mat& w) -> std::optional<Mat> {
    if (an.a_h.image(w) != an.a_h) return std::nullopt;
    auto q = restrict_to(an.a_circ, w);
    if (!q) return std::nullopt;
    Mat id = Mat::identity(q->rows());
    if (*q * *q != id || *q == id || rank(*q - id) != 1) return std::nullopt;
    for (const auto& v : fixed.basis()) {
      Vec c = an.a_circ.coordinates(v);
      if (*q * c != c) return std::nullopt;
    }
    return q;
  };
  auto finish = [&](WallGenerator& gen, const Mat& w, const Mat& q) {
    auto idx = table.find(w);
    if (!idx) throw ContractError("wall reflection is not in W(Sigma)");
    gen.wall = wall;
    gen.word = table.elements()[*idx].word;
    gen.on_a = w;
    gen.on_quotient = q;
  };

  for (const auto& sigma : an.indecomposables) {
    Vec f = g.functional(sigma);
    if (!std::all_of(span.basis().begin(), span.basis().end(), [&](const Vec& x) { return sgn(dot(f, x)) == 0; }))
      continue;
    std::optional<IntVec> rho;
    if (rs.is_root(sigma)) rho = sigma;
    else if (auto h = halve(sigma); h && rs.is_root(*h)) rho = h;
    if (rho) {
      Mat w = reflection_on_a(g, *rho);
      if (auto q = check(w)) {
        WallGenerator gen;
        gen.sigma = sigma;
        gen.witness = "root";
        gen.beta = *rho;
        finish(gen, w, *q);
        return gen;
      }
      continue;
    }
    for (const auto& beta : rs.positive_roots()) {
      IntVec gamma = sub_int(sigma, beta);
      auto k = rs.index(gamma);
      if (!k || !rs.is_positive(*k) || sgn(rs.inner(beta, gamma)) != 0) continue;
      Subspace cor = Subspace::span(g.a_dim(), {g.cartan_coroot(beta), g.cartan_coroot(gamma)}).intersect(an.a_h);
      if (cor.dim() == 0) continue;
      Mat w = reflection_on_a(g, beta) * reflection_on_a(g, gamma);
      if (auto q = check(w)) {
        WallGenerator gen;
        gen.sigma = sigma;
        gen.witness = "pair";
        gen.beta = beta;
        gen.gamma = gamma;
        gen.a_h_witness = cor.basis().front();
        finish(gen, w, *q);
        return gen;
      }
    }
  }
  throw ContractError("wall reflection contract violated: no root or orthogonal pair for the wall");
}

int matrix_order(const Mat& m, int bound) {
  Mat id = Mat::identity(m.rows());
  Mat p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

namespace {

std::string component_type(const std::vector<std::size_t>& nodes, const std::vector<std::vector<int>>& m) {
  const std::size_t n = nodes.size();
  if (n == 1) return "A1";
  if (n == 2) {
    int k = m[nodes[0]][nodes[1]];
    if (k == 3) return "A2";
    if (k == 4) return "B2";
    if (k == 6) return "G2";
    return k == 0 ? "I2(inf)" : "I2(" + std::to_string(k) + ")";
  }
  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::size_t edges = 0, fours = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      int k = m[nodes[a]][nodes[b]];
      if (k == 2) continue;
      if (k != 3 && k != 4) return "unknown";
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++edges;
      if (k == 4) ++fours;
    }
  if (edges != n - 1 || fours > 1) return "unknown";
  std::vector<std::size_t> branch, leaves;
  for (std::size_t a = 0; a < n; ++a) {
    if (adj[a].size() >= 3) branch.push_back(a);
    if (adj[a].size() == 1) leaves.push_back(a);
  }
  const std::string ns = std::to_string(n);
  if (branch.empty()) {
    if (fours == 0) return "A" + ns;
    // the 4-edge at an end gives B_n, in the middle of a 4-chain gives F4
    for (auto l : leaves)
      if (m[nodes[l]][nodes[adj[l][0]]] == 4) return "B" + ns;
    return n == 4 ? "F4" : "unknown";
  }
  if (fours > 0 || branch.size() != 1 || adj[branch[0]].size() != 3) return "unknown";
  std::vector<std::size_t> arms;
  for (auto start : adj[branch[0]]) {
    std::size_t len = 1, prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + ns;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + ns;
  return "unknown";
}

}  // namespace

std::string coxeter_type(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return "trivial";
  std::vector<int> comp(n, -1);
  std::vector<std::string> parts;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes{s};
    comp[s] = static_cast<int>(s);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t t = 0; t < n; ++t)
        if (comp[t] < 0 && m[nodes[i]][t] != 2) {
          comp[t] = static_cast<int>(s);
          nodes.push_back(t);
        }
    std::sort(nodes.begin(), nodes.end());
    parts.push_back(component_type(nodes, m));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "x") + p;
  return out;
}

LittleWeylGroup little_weyl_group(const LieAlgebra& g, const SphericalAnalysis& an, std::size_t bound, std::uint64_t seed) {
  LittleWeylGroup lw;
  CosetTable table(g, an.q.sigma0);
  Cone c = compression_cone(g, an);
  lw.quotient_basis = an.a_circ.basis();
  lw.a_E = c.edge();
  {
    Mat gram = g.form_on_a();
    std::vector<Vec> rows;
    for (const auto& x : lw.a_E.basis()) rows.push_back(gram * x);
    lw.edge_quotient_basis = rows.empty() ? Subspace::whole(g.a_dim()).basis() : nullspace(Mat::from_rows(rows, g.a_dim()));
  }
  for (const auto& wall : c.walls()) lw.generators.push_back(wall_reflection(g, an, wall, table));
  const std::size_t k = an.a_circ.dim();
  const Mat id_q = Mat::identity(k);

  auto make = [&](const Mat& w) {
    const WeylElement& rep = table.representative(w);
    LittleWeylElement e;
    e.word = rep.word;
    e.on_a = rep.action_on_a;
    auto q = restrict_to(an.a_circ, e.on_a);
    if (!q) throw ContractError("little Weyl element does not preserve a_circ");
    e.on_quotient = *q;
    e.coset_label = word_label(e.word);
    return e;
  };

  std::map<std::string, std::size_t> index;
  lw.elements.push_back(make(Mat::identity(g.a_dim())));
  index[lw.elements[0].coset_label] = 0;
  for (std::size_t i = 0; i < lw.elements.size(); ++i) {
    for (const auto& gen : lw.generators) {
      Mat prod = lw.elements[i].on_a * gen.on_a;
      auto e = make(prod);
      // the parabolic subgroup acts trivially on a_circ
      if (*restrict_to(an.a_circ, prod) != e.on_quotient) lw.diagnostics.push_back("coset action on a/a_h is not well defined");
      if (index.count(e.coset_label)) continue;
      if (lw.elements.size() >= bound) {
        lw.diagnostics.push_back("closure exceeds bound " + std::to_string(bound));
        break;
      }
      index[e.coset_label] = lw.elements.size();
      lw.elements.push_back(std::move(e));
    }
    if (!lw.diagnostics.empty()) break;
  }
  lw.order = lw.elements.size();

  // group axioms on a/a_h
  std::map<std::vector<std::string>, std::size_t> by_matrix;
  for (std::size_t i = 0; i < lw.elements.size(); ++i)
    if (!by_matrix.emplace(key_of(lw.elements[i].on_quotient), i).second)
      lw.diagnostics.push_back("two cosets act identically on a/a_h");
  Mat gram_q = gram_on(g, lw.quotient_basis);
  for (const auto& a : lw.elements) {
    bool has_inverse = false;
    for (const auto& b : lw.elements) {
      Mat ab = a.on_quotient * b.on_quotient;
      if (!by_matrix.count(key_of(ab))) lw.diagnostics.push_back("not closed: " + a.coset_label + " * " + b.coset_label);
      if (ab == id_q) has_inverse = true;
    }
    if (!has_inverse) lw.diagnostics.push_back("no inverse for " + a.coset_label);
    if (a.on_quotient.transpose() * gram_q * a.on_quotient != gram_q)
      lw.diagnostics.push_back("not orthogonal: " + a.coset_label);
    if (an.a_h.image(a.on_a) != an.a_h) lw.diagnostics.push_back("does not preserve a_h: " + a.coset_label);
    // trivial on a_E/a_h
    for (const auto& x : lw.a_E.basis())
      if (!an.a_h.contains(sub(a.on_a * x, x))) lw.diagnostics.push_back("acts nontrivially on a_E/a_h: " + a.coset_label);
  }
  for (const auto& gen : lw.generators)
    if (gen.on_quotient * gen.on_quotient != id_q) lw.diagnostics.push_back("generator does not square to 1");

  const std::size_t ng = lw.generators.size();
  lw.coxeter_matrix.assign(ng, std::vector<int>(ng, 1));
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < ng; ++j) {
      int o = matrix_order(lw.generators[i].on_quotient * lw.generators[j].on_quotient);
      lw.coxeter_matrix[i][j] = o;
      if (o != 1 && o != 2 && o != 3 && o != 4 && o != 6) lw.diagnostics.push_back("non-crystallographic product order");
    }
  lw.coxeter_type = coxeter_type(lw.coxeter_matrix);

  // tiling of a/a_h by the images of p_h(C)
  if (k > 0) {
    Cone pc = c.image(projection_to_a_circ(an));
    if (!pc.is_full_dimensional()) lw.diagnostics.push_back("p_h(C) is not full-dimensional");
    std::vector<Cone> images;
    for (const auto& e : lw.elements) images.push_back(pc.image(e.on_quotient));
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (images[i].intersect(images[j]).is_full_dimensional()) lw.tiling.disjoint = false;
    std::vector<Vec> hs;
    for (const auto& im : images) hs.insert(hs.end(), im.facets().begin(), im.facets().end());
    auto cert = enumerate_chambers(k, hs);
    lw.tiling.certificate_chambers = cert.chambers.size();
    for (const auto& ch : cert.chambers) {
      std::size_t hits = 0;
      for (const auto& im : images) hits += im.contains_interior(ch.point);
      if (hits != 1) lw.tiling.covering = false;
    }
    Sampler rnd(seed);
    for (int s = 0; s < 64; ++s) {
      Vec x = rnd.vec(k, 5);
      ++lw.tiling.samples;
      if (std::none_of(images.begin(), images.end(), [&](const Cone& im) { return im.contains(x); }))
        lw.tiling.sample_covered = false;
    }
  }
  return lw;
}

LimitWeyl weyl_from_limits(const LieAlgebra& g, const SphericalAnalysis& an, MLattice lattice) {
  auto adm = admissibility(g, an);
  if (!adm.admissible) throw std::invalid_argument("weyl_from_limits: point is not admissible");
  const auto& rs = g.root_system();
  CosetTable table(g, an.q.sigma0);
  std::vector<Mat> chars;
  for (const auto& chi : m_sign_characters(g, lattice).elements) chars.push_back(sign_character_matrix(g, chi));
  std::set<IntVec> levi;
  for (auto k : an.q.sigma0) {
    levi.insert(rs.roots()[k]);
    levi.insert(neg_int(rs.roots()[k]));
  }
  auto profile = [&](const Subspace& s) {
    std::vector<std::size_t> p;
    for (std::size_t k = 0; k < rs.roots().size(); ++k)
      if (s.contains(unit(g.dim(), g.root_vector(k)))) p.push_back(k);
    p.push_back(s.intersect(g.a()).dim());
    return p;
  };
  struct Candidate {
    std::string label;
    Subspace image;
    std::vector<std::size_t> profile;
  };
  std::vector<Candidate> cands;
  for (const auto& w : table.elements()) {
    if (an.a_h.image(w.action_on_a) != an.a_h) continue;
    bool permutes = true;
    for (const auto& r : levi) permutes = permutes && levi.count(act_on_root(g, w.action_on_a, r));
    if (!permutes) continue;
    Subspace im = an.h_empty.image(w.adjoint_lift);
    cands.push_back({table.label(w.action_on_a), im, profile(im)});
  }

  LimitWeyl out;
  std::set<std::string> all;
  for (const auto& ch : adm.chambers) {
    ChamberMatch m;
    m.signs = ch.signs;
    m.point = ch.point;
    m.limit = ch.limit;
    auto prof = profile(ch.limit);
    std::set<std::string> found;
    for (const auto& c : cands) {
      if (c.profile != prof) continue;
      ++m.candidates;
      for (const auto& chi : chars)
        if (c.image.image(chi) == ch.limit) {
          found.insert(c.label);
          break;
        }
    }
    m.cosets.assign(found.begin(), found.end());
    if (found.empty()) out.diagnostics.push_back("no coset matches chamber " + to_string(ch.point));
    if (found.size() > 1) out.diagnostics.push_back("several cosets match chamber " + to_string(ch.point));
    all.insert(found.begin(), found.end());
    out.chambers.push_back(std::move(m));
  }
  out.cosets.assign(all.begin(), all.end());
  return out;
}

std::vector<IntVec> integer_kernel(const Mat& m) {
  const std::size_t rows = m.rows(), n = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < n; ++j) den = lcm(den, m(i, j).get_den());
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = m(i, j) * den;
      a[i][j] = v.get_num();
    }
  }
  std::vector<std::vector<mpz_class>> u(n, std::vector<mpz_class>(n, 0));
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
  auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
    for (std::size_t i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < n; ++i) std::swap(u[i][x], u[i][y]);
  };
  std::size_t c0 = 0;
  for (std::size_t i = 0; i < rows && c0 < n; ++i) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t j = c0; j < n; ++j)
        if (a[i][j] != 0 && (!best || abs(a[i][j]) < abs(a[i][*best]))) best = j;
      if (!best) break;
      swap_cols(c0, *best);
      bool done = true;
      for (std::size_t j = c0 + 1; j < n; ++j) {
        if (a[i][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[i][c0].get_mpz_t());
        col_op(j, c0, q);
        if (a[i][j] != 0) done = false;
      }
      if (done) {
        ++c0;
        break;
      }
    }
  }
  std::vector<IntVec> out;
  for (std::size_t j = c0; j < n; ++j) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j].get_si();
    out.push_back(v);
  }
  return out;
}

SphericalRootData spherical_roots(const LieAlgebra& g, const LittleWeylGroup& w) {
  SphericalRootData out;
  const std::size_t r = g.rank(), n = g.a_dim();
  // Lambda: root-lattice vectors vanishing on a_E
  Mat sys(w.a_E.dim(), r);
  for (std::size_t j = 0; j < r; ++j) {
    IntVec e(r, 0);
    e[j] = 1;
    Vec f = g.functional(e);
    for (std::size_t i = 0; i < w.a_E.dim(); ++i) sys(i, j) = dot(f, w.a_E.basis()[i]);
  }
  out.lattice_basis = w.a_E.dim() == 0 ? std::vector<IntVec>{} : integer_kernel(sys);
  if (w.a_E.dim() == 0)
    for (std::size_t j = 0; j < r; ++j) {
      IntVec e(r, 0);
      e[j] = 1;
      out.lattice_basis.push_back(e);
    }
  const std::size_t s = out.lattice_basis.size();
  if (s + w.a_E.dim() != n) throw ContractError("spherical roots: lattice rank differs from dim a/a_E");
  std::vector<Vec> fs;
  for (const auto& l : out.lattice_basis) fs.push_back(g.functional(l));
  Mat fmat = Mat::from_columns(fs, n);
  auto combine = [&](const Vec& c) {
    IntVec root(r, 0);
    IntVec ci = to_intvec(c);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < r; ++i) root[i] += ci[j] * out.lattice_basis[j][i];
    return root;
  };

  std::set<IntVec> roots;
  std::vector<Mat> reflections;
  for (const auto& e : w.elements) {
    auto inv = inverse(e.on_a);
    if (!inv) throw ContractError("spherical roots: singular element");
    Mat contra = inv->transpose();  // lambda -> lambda o w^-1
    for (const auto& f : fs) {
      auto c = s ? solve(fmat, contra * f) : std::optional<Vec>(Vec{});
      bool integral = c && std::all_of(c->begin(), c->end(), [](const Rational& q) { return q.get_den() == 1; });
      if (!integral) out.lattice_preserved = false;
    }
    // reflections: fixed space of codimension one on a/a_E
    std::vector<Vec> moved = w.a_E.basis();
    for (std::size_t j = 0; j < n; ++j) moved.push_back(sub(e.on_a * unit(n, j), unit(n, j)));
    if (rank(moved, n) != w.a_E.dim() + 1) continue;
    std::vector<Vec> cols;
    for (const auto& f : fs) cols.push_back(add(contra * f, f));
    auto ker = nullspace(Mat::from_columns(cols, n));
    if (ker.size() != 1) throw ContractError("spherical roots: reflection without a one-dimensional -1 eigenspace");
    IntVec root = combine(primitive(ker[0]));
    roots.insert(root);
    roots.insert(neg_int(root));
    reflections.push_back(e.on_quotient);
  }
  out.roots.assign(roots.begin(), roots.end());

  // W permutes Sigma_Z
  for (const auto& e : w.elements)
    for (const auto& root : out.roots)
      if (!roots.count(act_on_root(g, e.on_a, root))) out.roots_permuted = false;

  // W(Sigma_Z) = W
  if (!w.elements.empty()) {
    std::set<std::vector<std::string>> seen{key_of(Mat::identity(w.elements[0].on_quotient.rows()))};
    std::deque<Mat> queue{Mat::identity(w.elements[0].on_quotient.rows())};
    while (!queue.empty() && seen.size() <= w.order) {
      Mat cur = queue.front();
      queue.pop_front();
      for (const auto& refl : reflections) {
        Mat next = cur * refl;
        if (seen.insert(key_of(next)).second) queue.push_back(next);
      }
    }
    out.generates_w = seen.size() == w.order;
  }
  out.coxeter_orders = w.coxeter_matrix;
  return out;
}

}  // namespace lwg
