#include "lwg/limits.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace lwg {

GradedDirection GradedDirection::of(const LieAlgebra& g, const Vec& x_a) {
  Vec ev = g.ad_eigenvalues(x_a);
  std::map<Rational, std::vector<std::size_t>> groups;
  for (std::size_t b = 0; b < ev.size(); ++b) groups[ev[b]].push_back(b);
  GradedDirection d;
  d.x = x_a;
  for (auto& [lam, idx] : groups) {
    d.eigenvalues.push_back(lam);
    d.blocks.push_back(idx);
  }
  return d;
}

Mat GradedDirection::projection(std::size_t i, std::size_t dim) const {
  Mat p(dim, dim);
  for (auto b : blocks.at(i)) p(b, b) = 1;
  return p;
}

Subspace limit_subspace(const LieAlgebra& g, const Subspace& e, const Vec& x_a) {
  const std::size_t n = g.dim();
  auto d = GradedDirection::of(g, x_a);
  std::vector<std::size_t> filtration;
  std::vector<Vec> out;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    filtration.insert(filtration.end(), d.blocks[i].begin(), d.blocks[i].end());
    Subspace piece = e.intersect(Subspace::coordinate(n, filtration));
    Mat p = d.projection(i, n);
    for (const auto& v : piece.basis()) {
      Vec w = p * v;
      if (!is_zero(w)) out.push_back(std::move(w));
    }
  }
  Subspace lim = Subspace::span(n, out);
  if (lim.dim() != e.dim()) throw ContractError("limit_subspace: dimension not preserved");
  return lim;
}

bool is_order_regular(const LieAlgebra& g, const Vec& x_a) {
  std::set<Rational> values;
  for (const auto& r : g.root_system().roots())
    if (!values.insert(g.evaluate(r, x_a)).second) return false;
  return true;
}

std::vector<IntVec> order_regular_hyperplanes(const LieAlgebra& g) {
  const auto& roots = g.root_system().roots();
  std::set<IntVec> seen;
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      IntVec d(roots[i].size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = roots[i][k] - roots[j][k];
      Vec p = primitive(to_vec(d));
      for (const auto& x : p)
        if (sgn(x) != 0) {
          if (sgn(x) < 0) p = scale(-1, p);
          break;
        }
      IntVec key = to_intvec(p);
      if (seen.insert(key).second) out.push_back(key);
    }
  return out;
}

namespace {

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return m;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
}

Eigen::MatrixXd to_eigen(const Subspace& s) {
  Eigen::MatrixXd m(s.ambient_dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j)
    for (std::size_t i = 0; i < s.ambient_dim(); ++i) m(i, j) = s.basis()[j][i].get_d();
  return m;
}

}  // namespace

double principal_angle_distance(const Subspace& a, const std::vector<std::vector<double>>& frame) {
  if (frame.size() != a.dim()) return 1.0;
  if (a.dim() == 0) return 0.0;
  Eigen::MatrixXd qa = orthonormal_columns(to_eigen(a));
  Eigen::MatrixXd qb(a.ambient_dim(), frame.size());
  for (std::size_t j = 0; j < frame.size(); ++j)
    for (std::size_t i = 0; i < a.ambient_dim(); ++i) qb(i, j) = frame[j][i];
  Eigen::MatrixXd resid = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(resid);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

FlowReport float_flow_oracle(const LieAlgebra& g, const Subspace& e, const Vec& x_a, double t_max, double tol) {
  using Real = boost::multiprecision::mpfr_float;
  const std::size_t n = g.dim(), k = e.dim();
  Vec ev = g.ad_eigenvalues(x_a);
  std::vector<double> lam(n);
  double lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lam[i] = ev[i].get_d();
    lo = std::min(lo, lam[i]);
    hi = std::max(hi, lam[i]);
  }
  FlowReport rep;
  std::set<double> distinct(lam.begin(), lam.end());
  double gap = 0;
  for (auto it = distinct.begin(); it != distinct.end() && std::next(it) != distinct.end(); ++it) {
    double d = *std::next(it) - *it;
    gap = gap == 0 ? d : std::min(gap, d);
  }
  rep.worst_rate = gap > 0 ? std::exp(-gap * t_max) : 0.0;
  rep.converged = rep.worst_rate < tol;

  // Rounding errors in directions of larger eigenvalue grow like
  // exp((hi - lo) t); carry enough digits to absorb that growth.
  const double spread = hi - lo;
  const double dt = spread > 0 ? std::min(1.0, t_max) : t_max;
  unsigned digits = static_cast<unsigned>(spread * (t_max + dt) / std::log(10.0)) + 40;
  boost::multiprecision::mpfr_float::default_precision(digits);

  std::vector<std::vector<Real>> q(k, std::vector<Real>(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) q[j][i] = Real(e.basis()[j][i].get_mpq_t());
  auto orthonormalize = [&] {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < j; ++l) {
          Real c = 0;
          for (std::size_t i = 0; i < n; ++i) c += q[j][i] * q[l][i];
          for (std::size_t i = 0; i < n; ++i) q[j][i] -= c * q[l][i];
        }
        Real norm = 0;
        for (std::size_t i = 0; i < n; ++i) norm += q[j][i] * q[j][i];
        norm = sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) q[j][i] /= norm;
      }
  };
  orthonormalize();
  std::vector<Real> factor(n);
  double t = 0;
  while (t < t_max && spread > 0) {
    double step = std::min(dt, t_max - t);
    for (std::size_t i = 0; i < n; ++i) factor[i] = exp(Real(step) * Real(ev[i].get_mpq_t()));
    for (auto& col : q)
      for (std::size_t i = 0; i < n; ++i) col[i] *= factor[i];
    orthonormalize();
    t += step;
  }
  rep.frame.assign(k, std::vector<double>(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) rep.frame[j][i] = q[j][i].convert_to<double>();
  rep.distance = principal_angle_distance(limit_subspace(g, e, x_a), rep.frame);
  return rep;
}

}  // namespace lwg
