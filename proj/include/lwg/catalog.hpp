#pragma once

#include "lwg/space.hpp"

namespace lwg {

/// A non-adapted translate of the base point and the closure of its cone.
struct TranslateWitness {
  std::vector<WordEntry> word;
  std::vector<Vec> cone_facets;
};

struct CatalogEntry {
  SpaceDescription space;  // claims hold the expected record
  std::string quasi_affine_note;
  std::string oracle;  // where the expected values are checked independently
  std::optional<TranslateWitness> translate;

  const std::string& name() const { return space.name; }
  const Record& expected() const { return *space.claims; }
};

const std::vector<CatalogEntry>& list_entries();
/// Throws std::out_of_range for an unknown name.
const CatalogEntry& find_entry(const std::string& name);
Record expected_results(const std::string& name);

/// Runs the pipeline at z and fills every field of the record.
Record compute_record(const LieAlgebra& g, const BasePoint& z);

}  // namespace lwg
