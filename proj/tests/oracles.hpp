#pragma once

// Independent oracles shared by the tests: float flows instead of the exact
// limit formula, brute force over W(Sigma) instead of wall reflections.

#include "lwg/limits.hpp"
#include "lwg/spherical.hpp"

#include <algorithm>
#include <set>

namespace oracle {

using namespace lwg;

struct FlowMatch {
  std::vector<std::string> cosets;   // distinct labels over all chambers
  std::vector<Vec> matching_points;  // chambers whose limit is chi h_empty
  std::vector<std::vector<int>> matching_signs;
  bool converged = true;
  bool every_chamber_matched = true;
};

// Shortest u with u^-1 w in W_J, J the simple roots of the Levi.
inline std::string coset_label(const std::vector<WeylElement>& elems, const std::set<std::size_t>& j,
                               const WeylElement& w) {
  auto in_wj = [&](const IntVec& word) {
    return std::all_of(word.begin(), word.end(), [&](long s) { return j.count(static_cast<std::size_t>(s)) > 0; });
  };
  for (const auto& u : elems) {
    Mat v = *inverse(u.action_on_a) * w.action_on_a;
    for (const auto& x : elems)
      if (x.action_on_a == v && in_wj(x.word)) return word_label(u.word);
  }
  return "?";
}

// Float flows at t = 40 over every order-regular chamber, matched against every
// chi Ad(n_w) h_empty.
inline FlowMatch flow_match(const LieAlgebra& g, const SphericalAnalysis& an) {
  auto elems = weyl_group_elements(g);
  std::set<std::size_t> j(an.q.sigma0.begin(), an.q.sigma0.end());
  std::vector<Mat> chars;
  for (const auto& chi : m_sign_characters(g).elements) chars.push_back(sign_character_matrix(g, chi));
  std::vector<std::pair<std::string, Subspace>> cands;
  for (const auto& w : elems) {
    Subspace base = an.h_empty.image(w.adjoint_lift);
    std::string label = coset_label(elems, j, w);
    for (const auto& chi : chars) cands.emplace_back(label, base.image(chi));
  }
  FlowMatch out;
  std::set<std::string> found;
  for (const auto& ch : order_regular_chambers(g).chambers) {
    auto flow = float_flow_oracle(g, an.h_z, ch.point, 40, 1e-9);
    out.converged = out.converged && flow.converged;
    bool matched = false;
    for (const auto& [label, s] : cands)
      if (principal_angle_distance(s, flow.frame) < 1e-6) {
        found.insert(label);
        matched = true;
        if (label == "e" && std::find(out.matching_signs.begin(), out.matching_signs.end(), ch.signs) ==
                                out.matching_signs.end()) {
          out.matching_signs.push_back(ch.signs);
          out.matching_points.push_back(ch.point);
        }
      }
    out.every_chamber_matched = out.every_chamber_matched && matched;
  }
  out.cosets.assign(found.begin(), found.end());
  return out;
}

// Closure of the union of the chambers whose flow limit is chi h_empty.
inline Cone flow_cone(const LieAlgebra& g, const FlowMatch& m) {
  auto cs = order_regular_chambers(g);
  std::vector<Vec> rays;
  for (const auto& signs : m.matching_signs) {
    std::vector<Vec> gam;
    for (std::size_t i = 0; i < signs.size(); ++i) gam.push_back(scale(-signs[i], cs.hyperplanes[i]));
    Cone c = Cone::from_inequalities(g.a_dim(), gam);
    rays.insert(rays.end(), c.rays().begin(), c.rays().end());
    for (const auto& l : c.lineality().basis()) {
      rays.push_back(l);
      rays.push_back(scale(-1, l));
    }
  }
  return Cone::from_generators(g.a_dim(), rays);
}

// Order of the group generated by the B-orthogonal reflections of the given
// root-lattice functionals, acting on a (they fix a_E pointwise when the
// functionals vanish there).
inline std::size_t reflection_group_order(const LieAlgebra& g, const std::vector<IntVec>& roots, std::size_t cap = 200) {
  Mat gram = g.form_on_a();
  auto ginv = *inverse(gram);
  std::vector<Mat> gens;
  for (const auto& r : roots) {
    Vec f = g.functional(r);
    Vec v = ginv * f;  // B-dual of f
    Rational ff = dot(f, v);
    Mat m = Mat::identity(g.a_dim());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= 2 * v[i] * f[k] / ff;
    gens.push_back(m);
  }
  std::vector<Mat> elems{Mat::identity(g.a_dim())};
  for (std::size_t i = 0; i < elems.size() && elems.size() < cap; ++i)
    for (const auto& s : gens) {
      Mat p = elems[i] * s;
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  return elems.size();
}

}  // namespace oracle
