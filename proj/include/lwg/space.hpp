#pragma once

#include "lwg/spherical.hpp"

#include "json.hpp"

namespace lwg {

inline constexpr int kSchemaVersion = 1;

/// Invariants of a space; in a space file every field is optional.
struct Record {
  std::optional<bool> adapted;
  std::optional<std::vector<IntVec>> S_z;
  std::optional<std::vector<Vec>> cone_facets;  // primitive facet normals of the closed cone, sorted
  std::optional<std::size_t> a_h_dim, a_E_dim, w_order;
  std::optional<std::string> coxeter_type;
  std::optional<std::vector<IntVec>> sigma_Z;  // sorted
  std::optional<bool> admissible;              // at the base point

  friend bool operator==(const Record&, const Record&) = default;
};

struct SpaceDescription {
  std::string name;
  std::string cartan_type;  // empty when given by cartan_matrix
  IntMat cartan_matrix;
  std::size_t center_dim = 0;
  std::vector<Vec> subalgebra;  // reference subalgebra rows, in the basis order of LieAlgebra
  std::vector<WordEntry> base_point;
  std::string note;
  std::optional<Record> claims;

  LieAlgebra algebra() const;
  Subspace reference(const LieAlgebra& g) const;
  BasePoint base(const LieAlgebra& g) const;

  friend bool operator==(const SpaceDescription&, const SpaceDescription&) = default;
};

nlohmann::json record_to_json(const Record& r);
/// Throws ParseError naming the offending JSON pointer.
Record record_from_json(const nlohmann::json& j, const std::string& where = "");

nlohmann::json space_to_json(const SpaceDescription& s);
SpaceDescription space_from_json(const nlohmann::json& j);
SpaceDescription load_space_file(const std::string& path);

nlohmann::json word_to_json(const std::vector<WordEntry>& word);
std::vector<WordEntry> word_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json rationals_to_json(const Vec& v);
Vec rationals_from_json(const nlohmann::json& j, const std::string& where);

/// "field: claimed X, computed Y" for every claimed field that differs.
std::vector<std::string> compare_records(const Record& claimed, const Record& computed);

}  // namespace lwg
