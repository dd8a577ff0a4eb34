#pragma once

#include "lwg/lie_algebra.hpp"

namespace lwg {

/// Element of W(Sigma) with its canonical lift to N_G(a).
/// Words use 0-based simple-reflection indices; w = s_{word[0]} s_{word[1]} ...
struct WeylElement {
  IntVec word;
  Mat action_on_a;   // a-coordinates
  Mat adjoint_lift;  // Ad(n_w) on g
};

/// Ad(n_i) with n_i = exp(e_i) exp(-f_i) exp(e_i).
Mat simple_reflection_lift(const LieAlgebra& g, std::size_t i);
Mat simple_reflection_on_a(const LieAlgebra& g, std::size_t i);
WeylElement weyl_lift(const LieAlgebra& g, const IntVec& word);
/// Action of an a-matrix on a root-lattice vector (w applied to a functional).
IntVec act_on_root(const LieAlgebra& g, const Mat& w_on_a, const IntVec& root);
/// Root-lattice vector whose functional equals f, if any.
std::optional<IntVec> lattice_vector_of(const LieAlgebra& g, const Vec& f);

/// All elements of W(Sigma), shortlex-minimal words, identity first.
std::vector<WeylElement> weyl_group_elements(const LieAlgebra& g, std::size_t bound = 100000);
std::string word_label(const IntVec& word);

enum class MLattice { Coroot, Coweight };

/// chi(g_beta) = prod_i on_simple[i]^{beta_i}.
struct SignCharacter {
  std::vector<int> on_simple;
  int on_root(const IntVec& beta) const;
  friend bool operator==(const SignCharacter&, const SignCharacter&) = default;
  friend auto operator<=>(const SignCharacter&, const SignCharacter&) = default;
};

struct SignCharacterGroup {
  std::vector<IntVec> generators;  // lattice vectors t mod 2 (coordinates in the chosen lattice basis)
  std::vector<SignCharacter> elements;
};

SignCharacterGroup m_sign_characters(const LieAlgebra& g, MLattice lattice = MLattice::Coroot);
Mat sign_character_matrix(const LieAlgebra& g, const SignCharacter& chi);

/// Diagonal Ad(a) for the torus element with simple-root character values q_i.
Mat torus_action(const LieAlgebra& g, const Vec& character_values);
/// exp(ad Y) for Y with ad(Y) nilpotent; throws otherwise.
Mat nilpotent_action(const LieAlgebra& g, const Vec& y);

}  // namespace lwg
