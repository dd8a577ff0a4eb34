#include "lwg/subspace.hpp"

namespace lwg {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Mat m = Mat::from_rows(vectors, ambient);
  s.pivots_ = rref(m);
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(m.row(i));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit(ambient, i));
  return span(ambient, rows);
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& coords) {
  std::vector<Vec> rows;
  for (auto c : coords) rows.push_back(unit(ambient, c));
  return span(ambient, rows);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) return false;
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw ContractError("Subspace::coordinates: vector not in subspace");
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.n_ != n_) throw std::invalid_argument("Subspace sum: ambient mismatch");
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(n_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.n_ != n_) throw std::invalid_argument("Subspace intersect: ambient mismatch");
  if (basis_.empty() || other.basis_.empty()) return Subspace(n_);
  std::vector<Vec> residuals;
  for (const auto& b : basis_) residuals.push_back(other.reduce(b));
  Mat m = Mat::from_columns(residuals, n_);
  std::vector<Vec> out;
  for (const auto& c : nullspace(m)) {
    Vec x = zeros(n_);
    for (std::size_t i = 0; i < c.size(); ++i) axpy(x, c[i], basis_[i]);
    out.push_back(std::move(x));
  }
  return span(n_, out);
}

Subspace Subspace::std_complement() const {
  if (basis_.empty()) return whole(n_);
  return span(n_, nullspace(basis_matrix()));
}

Subspace Subspace::image(const Mat& m) const {
  if (m.cols() != n_) throw std::invalid_argument("Subspace::image: dimension mismatch");
  std::vector<Vec> rows;
  for (const auto& b : basis_) rows.push_back(m * b);
  return span(m.rows(), rows);
}

}  // namespace lwg
