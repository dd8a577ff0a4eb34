#include "lwg/lie_algebra.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace lwg {

namespace {

std::string root_label(const IntVec& r, bool positive) {
  IntVec a = r;
  if (!positive)
    for (auto& x : a) x = -x;
  std::string prefix = positive ? "e" : "f";
  long h = RootSystem::height(a);
  if (h == 1) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] == 1) return prefix + std::to_string(i + 1);
  }
  std::string s = prefix + "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace

LieAlgebra::LieAlgebra(IntMat cartan, std::size_t center_dim)
    : roots_(std::move(cartan)), center_(center_dim), npos_(roots_.positive_roots().size()) {
  const std::size_t r = rank();
  const auto& all = roots_.roots();
  root_pos_.assign(all.size(), 0);
  for (std::size_t k = npos_; k-- > 0;) {
    std::size_t neg = roots_.negative_of(k);
    root_pos_[neg] = tags_.size();
    tags_.push_back({BasisKind::NegativeRoot, neg, root_label(all[neg], false)});
  }
  for (std::size_t i = 0; i < r; ++i) tags_.push_back({BasisKind::Cartan, i, "h" + std::to_string(i + 1)});
  for (std::size_t i = 0; i < center_; ++i) tags_.push_back({BasisKind::Center, i, "z" + std::to_string(i + 1)});
  for (std::size_t k = 0; k < npos_; ++k) {
    root_pos_[k] = tags_.size();
    tags_.push_back({BasisKind::PositiveRoot, k, root_label(all[k], true)});
  }
  build_structure_constants();

  const std::size_t n = dim();
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(unit(n, i)));
  form_ = Mat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) form_(i, j) = form_(j, i) = trace(ads[i] * ads[j]);
  for (std::size_t i = 0; i < center_; ++i) form_(npos_ + r + i, npos_ + r + i) = 1;

  theta_ = Mat(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    const auto& t = tags_[b];
    if (t.kind == BasisKind::Cartan || t.kind == BasisKind::Center) theta_(b, b) = -1;
    else theta_(root_pos_[roots_.negative_of(t.index)], b) = -1;
  }
}

LieAlgebra LieAlgebra::from_type(const std::string& type, std::size_t center_dim) {
  return LieAlgebra(cartan_matrix_from_type(type), center_dim);
}

std::vector<std::string> LieAlgebra::labels() const {
  std::vector<std::string> out;
  for (const auto& t : tags_) out.push_back(t.label);
  return out;
}

std::size_t LieAlgebra::root_vector(const IntVec& root) const {
  auto k = roots_.index(root);
  if (!k) throw std::invalid_argument("not a root: " + format_intvec(root));
  return root_pos_[*k];
}

std::optional<std::size_t> LieAlgebra::weight_of(std::size_t b) const {
  const auto& t = tags_.at(b);
  if (t.kind == BasisKind::Cartan || t.kind == BasisKind::Center) return std::nullopt;
  return t.index;
}

// Chevalley structure constants from extraspecial pairs, using the standard
// relations between N_{a,b} for triples and quadruples of roots summing to 0.
void LieAlgebra::build_structure_constants() {
  const auto& R = roots_.roots();
  const std::size_t nr = R.size();
  auto sum_index = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    IntVec s = R[a];
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += R[b][i];
    return roots_.index(s);
  };
  auto len = [&](std::size_t a) { return roots_.inner(R[a], R[a]); };
  auto string_p = [&](std::size_t a, std::size_t b) {
    long p = 0;
    IntVec cur = R[b];
    while (true) {
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= R[a][i];
      if (!roots_.is_root(cur)) return p;
      ++p;
    }
  };
  auto pos = [&](std::size_t a) { return roots_.is_positive(a); };
  auto neg = [&](std::size_t a) { return roots_.negative_of(a); };

  std::map<std::pair<std::size_t, std::size_t>, Rational> npos;
  std::function<Rational(std::size_t, std::size_t)> N = [&](std::size_t a, std::size_t b) -> Rational {
    auto s = sum_index(a, b);
    if (!s) return 0;
    if (pos(a) && pos(b)) return npos.at({a, b});
    if (!pos(a) && !pos(b)) return -N(neg(a), neg(b));
    std::size_t c = neg(*s);
    if (pos(a) == pos(c)) return len(c) / len(b) * N(c, a);
    return len(c) / len(a) * N(b, c);
  };

  for (std::size_t xi = 0; xi < npos_; ++xi) {
    if (RootSystem::height(R[xi]) < 2) continue;
    std::size_t g = 0, d = 0;
    bool found = false;
    for (std::size_t i = 0; i < rank() && !found; ++i) {
      IntVec rest = R[xi];
      rest[i] -= 1;
      if (auto k = roots_.index(rest); k && pos(*k)) {
        g = i;
        d = *k;
        found = true;
      }
    }
    if (!found) throw ContractError("no extraspecial pair");
    Rational ngd = string_p(g, d) + 1;
    npos[{g, d}] = ngd;
    npos[{d, g}] = -ngd;
    for (std::size_t a = 0; a < npos_; ++a) {
      for (std::size_t b = 0; b < npos_; ++b) {
        auto s = sum_index(a, b);
        if (!s || *s != xi || npos.count({a, b})) continue;
        Rational t = 0;
        if (auto bg = sum_index(b, neg(g)))
          t += N(b, neg(g)) * N(a, neg(d)) / len(*bg);
        if (auto ag = sum_index(a, neg(g)))
          t += N(neg(g), a) * N(b, neg(d)) / len(*ag);
        Rational v = len(xi) * t / ngd;
        if (abs(v) != string_p(a, b) + 1) throw ContractError("structure constant magnitude mismatch");
        npos[{a, b}] = v;
        npos[{b, a}] = -v;
      }
    }
  }

  const std::size_t n = dim();
  table_.assign(n * n, {});
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (sgn(c) == 0) return;
    table_[i * n + j].emplace_back(k, c);
  };
  for (std::size_t a = 0; a < nr; ++a) {
    for (std::size_t b = 0; b < nr; ++b) {
      std::size_t i = root_pos_[a], j = root_pos_[b];
      if (b == neg(a)) {
        Vec c = roots_.coroot(R[a]);
        for (std::size_t k = 0; k < rank(); ++k) put(i, j, cartan_position(k), c[k]);
      } else if (auto s = sum_index(a, b)) {
        put(i, j, root_pos_[*s], N(a, b));
      }
    }
    for (std::size_t k = 0; k < rank(); ++k) {
      Rational w = roots_.pairing(R[a], k);
      put(cartan_position(k), root_pos_[a], root_pos_[a], w);
      put(root_pos_[a], cartan_position(k), root_pos_[a], -w);
    }
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
  Vec out = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      for (const auto& [k, c] : table_[i * n + j]) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw std::invalid_argument("ad: dimension mismatch");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : table_[i * n + j]) m(k, j) += x[i] * c;
  }
  return m;
}

Rational LieAlgebra::form(const Vec& x, const Vec& y) const { return dot(x, form_ * y); }

Subspace LieAlgebra::orthocomplement(const Subspace& e) const {
  if (e.dim() == 0) return Subspace::whole(dim());
  return Subspace::span(dim(), nullspace(e.basis_matrix() * form_));
}

Subspace LieAlgebra::centralizer(const Subspace& v) const {
  if (v.ambient_dim() != a_dim()) throw std::invalid_argument("centralizer: V must be given in a-coordinates");
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < roots_.roots().size(); ++k) {
    Vec f = functional(roots_.roots()[k]);
    bool vanishes = true;
    for (const auto& b : v.basis())
      if (sgn(dot(f, b)) != 0) vanishes = false;
    if (vanishes) idx.push_back(k);
  }
  return a() + root_span(idx);
}

Subspace LieAlgebra::root_span(const std::vector<std::size_t>& root_indices) const {
  std::vector<std::size_t> coords;
  for (auto k : root_indices) coords.push_back(root_pos_.at(k));
  return Subspace::coordinate(dim(), coords);
}

Vec LieAlgebra::functional(const IntVec& lv) const {
  Vec f = zeros(a_dim());
  for (std::size_t i = 0; i < rank(); ++i) f[i] = roots_.pairing(lv, i);
  return f;
}

Rational LieAlgebra::evaluate(const IntVec& lv, const Vec& x_a) const { return dot(functional(lv), x_a); }

Vec LieAlgebra::ad_eigenvalues(const Vec& x_a) const {
  Vec ev = zeros(dim());
  for (std::size_t b = 0; b < dim(); ++b)
    if (auto w = weight_of(b)) ev[b] = evaluate(roots_.roots()[*w], x_a);
  return ev;
}

Vec LieAlgebra::embed_a(const Vec& x_a) const {
  if (x_a.size() != a_dim()) throw std::invalid_argument("embed_a: expected a-coordinates");
  Vec x = zeros(dim());
  for (std::size_t i = 0; i < a_dim(); ++i) x[npos_ + i] = x_a[i];
  return x;
}

Vec LieAlgebra::project_a(const Vec& x) const {
  Vec out(a_dim());
  for (std::size_t i = 0; i < a_dim(); ++i) out[i] = x.at(npos_ + i);
  return out;
}

Subspace LieAlgebra::a() const {
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < a_dim(); ++i) c.push_back(npos_ + i);
  return Subspace::coordinate(dim(), c);
}

Subspace LieAlgebra::n() const {
  std::vector<std::size_t> c;
  for (std::size_t k = 0; k < npos_; ++k) c.push_back(root_pos_[k]);
  return Subspace::coordinate(dim(), c);
}

Subspace LieAlgebra::nbar() const {
  std::vector<std::size_t> c;
  for (std::size_t k = 0; k < npos_; ++k) c.push_back(root_pos_[roots_.negative_of(k)]);
  return Subspace::coordinate(dim(), c);
}

Subspace LieAlgebra::p() const { return a() + n(); }

Subspace LieAlgebra::a_part(const Subspace& e) const { return to_a_coords(e.intersect(a())); }

Subspace LieAlgebra::to_a_coords(const Subspace& e) const {
  std::vector<Vec> rows;
  for (const auto& b : e.basis()) {
    if (!a().contains(b)) throw std::invalid_argument("to_a_coords: subspace not inside a");
    rows.push_back(project_a(b));
  }
  return Subspace::span(a_dim(), rows);
}

Subspace LieAlgebra::from_a_coords(const Subspace& v) const {
  std::vector<Vec> rows;
  for (const auto& b : v.basis()) rows.push_back(embed_a(b));
  return Subspace::span(dim(), rows);
}

Mat LieAlgebra::form_on_a() const {
  Mat g(a_dim(), a_dim());
  for (std::size_t i = 0; i < a_dim(); ++i)
    for (std::size_t j = 0; j < a_dim(); ++j) g(i, j) = form_(npos_ + i, npos_ + j);
  return g;
}

Vec LieAlgebra::cartan_coroot(const IntVec& alpha) const {
  Vec c = roots_.coroot(alpha);
  c.resize(a_dim(), Rational(0));
  return c;
}

bool LieAlgebra::is_subalgebra(const Subspace& e) const {
  const auto& b = e.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!e.contains(bracket(b[i], b[j]))) return false;
  return true;
}

Subspace LieAlgebra::normalizer_in_a(const Subspace& e) const {
  std::vector<Vec> rows;
  for (const auto& v : e.basis()) {
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < a_dim(); ++k) cols.push_back(e.reduce(bracket(embed_a(unit(a_dim(), k)), v)));
    for (std::size_t c = 0; c < dim(); ++c) {
      Vec row(a_dim());
      for (std::size_t k = 0; k < a_dim(); ++k) row[k] = cols[k][c];
      if (!is_zero(row)) rows.push_back(row);
    }
  }
  if (rows.empty()) return Subspace::whole(a_dim());
  return Subspace::span(a_dim(), nullspace(Mat::from_rows(rows, a_dim())));
}

std::string LieAlgebra::describe(const Vec& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rational c = x[i];
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << " ";
    os << tags_[i].label;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace lwg
