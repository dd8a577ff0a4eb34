#include "lwg/group_elements.hpp"

#include <deque>
#include <map>
#include <set>

namespace lwg {

Mat simple_reflection_lift(const LieAlgebra& g, std::size_t i) {
  const std::size_t n = g.dim();
  IntVec alpha(g.rank(), 0);
  alpha.at(i) = 1;
  Mat e = exp_nilpotent(g.ad(unit(n, g.root_vector(alpha))));
  for (auto& x : alpha) x = -x;
  Mat f = exp_nilpotent(Rational(-1) * g.ad(unit(n, g.root_vector(alpha))));
  return e * f * e;
}

Mat simple_reflection_on_a(const LieAlgebra& g, std::size_t i) {
  IntVec alpha(g.rank(), 0);
  alpha.at(i) = 1;
  Vec f = g.functional(alpha);
  Mat m = Mat::identity(g.a_dim());
  for (std::size_t c = 0; c < g.a_dim(); ++c) m(i, c) -= f[c];
  return m;
}

WeylElement weyl_lift(const LieAlgebra& g, const IntVec& word) {
  WeylElement w{word, Mat::identity(g.a_dim()), Mat::identity(g.dim())};
  for (long i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= g.rank()) throw std::invalid_argument("weyl_lift: bad simple reflection index");
    w.action_on_a = w.action_on_a * simple_reflection_on_a(g, i);
    w.adjoint_lift = w.adjoint_lift * simple_reflection_lift(g, i);
  }
  return w;
}

std::optional<IntVec> lattice_vector_of(const LieAlgebra& g, const Vec& f) {
  const std::size_t r = g.rank();
  for (std::size_t k = r; k < f.size(); ++k)
    if (sgn(f[k]) != 0) return std::nullopt;
  Mat a(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = g.cartan()[i][j];
  Vec head(f.begin(), f.begin() + r);
  auto n = solve(a, head);
  if (!n) return std::nullopt;
  for (const auto& x : *n)
    if (x.get_den() != 1) return std::nullopt;
  return to_intvec(*n);
}

IntVec act_on_root(const LieAlgebra& g, const Mat& w_on_a, const IntVec& root) {
  auto inv = inverse(w_on_a);
  if (!inv) throw ContractError("act_on_root: singular action");
  Vec f = inv->transpose() * g.functional(root);
  auto v = lattice_vector_of(g, f);
  if (!v) throw ContractError("act_on_root: image is not in the root lattice");
  return *v;
}

std::vector<WeylElement> weyl_group_elements(const LieAlgebra& g, std::size_t bound) {
  const std::size_t r = g.rank();
  // a point with trivial stabilizer: alpha_i(x0) = 1 for all simple roots
  Mat at(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) at(j, i) = g.cartan()[i][j];
  Vec x0 = *solve(at, Vec(r, Rational(1)));
  x0.resize(g.a_dim(), Rational(0));

  std::vector<WeylElement> out;
  std::map<std::vector<std::string>, std::size_t> seen;
  std::vector<Mat> lifts, refl;
  for (std::size_t i = 0; i < r; ++i) {
    lifts.push_back(simple_reflection_lift(g, i));
    refl.push_back(simple_reflection_on_a(g, i));
  }
  out.push_back({{}, Mat::identity(g.a_dim()), Mat::identity(g.dim())});
  seen[to_strings(x0)] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      Mat m = out[head].action_on_a * refl[i];
      auto key = to_strings(m * x0);
      if (seen.count(key)) continue;
      IntVec word = out[head].word;
      word.push_back(static_cast<long>(i));
      seen[key] = out.size();
      out.push_back({word, m, out[head].adjoint_lift * lifts[i]});
      if (out.size() > bound) throw ContractError("Weyl group exceeds enumeration bound");
    }
  }
  return out;
}

std::string word_label(const IntVec& word) {
  if (word.empty()) return "e";
  std::string s;
  for (long i : word) s += "s" + std::to_string(i + 1);
  return s;
}

int SignCharacter::on_root(const IntVec& beta) const {
  int s = 1;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (on_simple[i] < 0 && (beta[i] % 2 != 0)) s = -s;
  return s;
}

SignCharacterGroup m_sign_characters(const LieAlgebra& g, MLattice lattice) {
  const std::size_t r = g.rank();
  SignCharacterGroup grp;
  std::vector<SignCharacter> gens;
  for (std::size_t i = 0; i < r; ++i) {
    SignCharacter chi{std::vector<int>(r, 1)};
    for (std::size_t j = 0; j < r; ++j) {
      long pairing = lattice == MLattice::Coroot ? g.cartan()[i][j] : (i == j ? 1 : 0);
      chi.on_simple[j] = (pairing % 2 == 0) ? 1 : -1;
    }
    IntVec t(r, 0);
    t[i] = 1;
    grp.generators.push_back(t);
    gens.push_back(chi);
  }
  std::set<SignCharacter> all;
  all.insert(SignCharacter{std::vector<int>(r, 1)});
  for (const auto& gen : gens) {
    std::set<SignCharacter> next = all;
    for (const auto& x : all) {
      SignCharacter y = x;
      for (std::size_t j = 0; j < r; ++j) y.on_simple[j] *= gen.on_simple[j];
      next.insert(y);
    }
    all = std::move(next);
  }
  SignCharacter id{std::vector<int>(r, 1)};
  grp.elements.push_back(id);
  for (const auto& x : all)
    if (!(x == id)) grp.elements.push_back(x);
  return grp;
}

Mat sign_character_matrix(const LieAlgebra& g, const SignCharacter& chi) {
  Mat m = Mat::identity(g.dim());
  for (std::size_t b = 0; b < g.dim(); ++b)
    if (auto w = g.weight_of(b)) m(b, b) = chi.on_root(g.root_system().roots()[*w]);
  return m;
}

Mat torus_action(const LieAlgebra& g, const Vec& q) {
  if (q.size() != g.rank()) throw std::invalid_argument("torus element needs one value per simple root");
  for (const auto& x : q)
    if (sgn(x) == 0) throw std::invalid_argument("torus character values must be nonzero");
  Mat m = Mat::identity(g.dim());
  for (std::size_t b = 0; b < g.dim(); ++b) {
    auto w = g.weight_of(b);
    if (!w) continue;
    const IntVec& beta = g.root_system().roots()[*w];
    Rational v = 1;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      long e = beta[i];
      for (long k = 0; k < std::abs(e); ++k) {
        if (e > 0) v *= q[i];
        else v /= q[i];
      }
    }
    m(b, b) = v;
  }
  return m;
}

Mat nilpotent_action(const LieAlgebra& g, const Vec& y) {
  Mat a = g.ad(y);
  Mat p = a;
  for (std::size_t k = 0; k < g.dim() && !p.is_zero(); ++k) p = p * a;
  if (!p.is_zero()) throw std::invalid_argument("nilpotent generator has non-nilpotent adjoint action");
  return exp_nilpotent(a);
}

}  // namespace lwg
