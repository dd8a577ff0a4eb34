#pragma once

#include "lwg/catalog.hpp"
#include "lwg/verify.hpp"

namespace lwg {

/// Exact structural checks at an adapted point z; one result per invariant.
/// Names: graph_decomposition, brion_symmetry, tperp, q_cap_h,
/// cone_contains_negative_chamber, cone_plus_a_h, edge_is_normalizer,
/// face_degenerations, phi, phi_degeneration, orbit_independence,
/// cone_monotonicity, little_weyl_group, tiling, degeneration_subgroup,
/// crystallographic, admissible_search, agreement.
std::vector<CheckResult> verify_space(const LieAlgebra& g, const BasePoint& z, std::uint64_t seed);

/// verify_space plus the claims of the space file (claims), the non-adapted
/// translate (translate_witness) and the n_t family on half-space cones (nt_fallback).
std::vector<CheckResult> verify_catalog_entry(const CatalogEntry& e, std::uint64_t seed);

/// Claimed record fields against the computed ones.
CheckResult verify_claims(const SpaceDescription& s);

}  // namespace lwg
