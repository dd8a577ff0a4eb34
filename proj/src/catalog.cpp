#include "lwg/catalog.hpp"

#include "lwg/weyl.hpp"

#include <algorithm>

namespace lwg {

namespace {

// Row of g-coordinates from (label, coefficient) pairs.
Vec row(const LieAlgebra& g, const std::vector<std::pair<std::string, long>>& terms) {
  auto labels = g.labels();
  Vec v = zeros(g.dim());
  for (const auto& [lab, c] : terms) {
    auto it = std::find(labels.begin(), labels.end(), lab);
    if (it == labels.end()) throw std::logic_error("catalog: unknown label " + lab);
    v[it - labels.begin()] += c;
  }
  return v;
}

CatalogEntry entry(const std::string& name, const std::string& type, std::size_t center,
                   const std::vector<std::vector<std::pair<std::string, long>>>& rows, std::vector<WordEntry> word,
                   const std::string& note, Record expected, const std::string& oracle) {
  CatalogEntry e;
  e.space.name = name;
  e.space.cartan_type = type;
  e.space.center_dim = center;
  LieAlgebra g = LieAlgebra::from_type(type, center);
  for (const auto& r : rows) e.space.subalgebra.push_back(row(g, r));
  e.space.base_point = std::move(word);
  e.space.note = note;
  e.space.claims = std::move(expected);
  e.quasi_affine_note = note;
  e.oracle = oracle;
  return e;
}

Record record(std::vector<IntVec> s, std::vector<Vec> facets, std::size_t a_h, std::size_t a_e, std::size_t order,
              std::string type, std::vector<IntVec> sigma_z, bool admissible) {
  Record r;
  r.adapted = true;
  r.S_z = std::move(s);
  r.cone_facets = std::move(facets);
  r.a_h_dim = a_h;
  r.a_E_dim = a_e;
  r.w_order = order;
  r.coxeter_type = std::move(type);
  r.sigma_Z = std::move(sigma_z);
  r.admissible = admissible;
  return r;
}

std::vector<CatalogEntry> build() {
  const std::string flow = "tests/test_catalog.cpp (float-flow limits over all chambers, brute-force W(Sigma) cosets)";
  std::vector<CatalogEntry> out;

  out.push_back(entry("A1_nbar", "A1", 0, {{{"f1", 1}}}, {},
                      "horospherical; G/Nbar is quasi-affine",
                      record({}, {}, 0, 1, 1, "trivial", {}, true), flow));
  {
    LieAlgebra g = LieAlgebra::from_type("A1");
    out.back().translate = TranslateWitness{{{WordEntry::Kind::Nilpotent, row(g, {{"e1", 1}}), {}}}, {Vec{1}}};
  }

  out.push_back(entry("A1_so2", "A1", 0, {{{"e1", 1}, {"f1", -1}}}, {},
                      "Riemannian symmetric; SL(2,R)/SO(2) is affine",
                      record({{2}}, {Vec{1}}, 0, 0, 2, "A1", {{-1}, {1}}, true), flow));

  out.push_back(entry("A1_so11", "A1", 0, {{{"e1", 1}, {"f1", 1}}}, {},
                      "split symmetric; SL(2,R)/SO(1,1) is affine",
                      record({{2}}, {Vec{1}}, 0, 0, 2, "A1", {{-1}, {1}}, true), flow));

  out.push_back(entry("A1xA1_diag_w0", "A1xA1", 0,
                      {{{"e1", 1}, {"e2", 1}}, {{"h1", 1}, {"h2", 1}}, {{"f1", 1}, {"f2", 1}}},
                      {{WordEntry::Kind::Weyl, {}, {1}}},
                      "group case (G x G)/diag(G), base point twisted by the longest element of the second factor; affine",
                      record({{1, 1}}, {Vec{1, 1}}, 1, 1, 2, "A1", {{-1, -1}, {1, 1}}, true), flow));

  out.push_back(entry("A2_so3", "A2", 0,
                      {{{"e1", 1}, {"f1", -1}}, {{"e2", 1}, {"f2", -1}}, {{"e(1,1)", 1}, {"f(1,1)", -1}}}, {},
                      "Riemannian symmetric; SL(3,R)/SO(3) is affine",
                      record({{0, 2}, {2, 0}, {2, 2}}, {Vec{-1, 2}, Vec{2, -1}}, 0, 0, 6, "A2",
                             {{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}}, true),
                      flow));

  out.push_back(entry("A2_nbar", "A2", 0, {{{"f1", 1}}, {{"f2", 1}}, {{"f(1,1)", 1}}}, {},
                      "horospherical; G/Nbar is quasi-affine",
                      record({}, {}, 0, 2, 1, "trivial", {}, true), flow));
  {
    LieAlgebra g = LieAlgebra::from_type("A2");
    out.back().translate = TranslateWitness{{{WordEntry::Kind::Nilpotent, row(g, {{"e1", 1}, {"e2", 1}}), {}}},
                                            {Vec{-1, 2}, Vec{2, -1}}};
  }

  out.push_back(entry("A1T1_fz", "A1", 1, {{{"f1", 1}, {"z1", 1}}}, {},
                      "gl2 with the non-algebraic line spanned by f + z; not an algebraic subgroup, kept as the "
                      "half-space-cone entry where the n_t family is non-constant",
                      record({{1}}, {Vec{1, 0}}, 0, 1, 2, "A1", {{-1}, {1}}, false), flow));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : list_entries())
    if (e.name() == name) return e;
  throw std::out_of_range("unknown catalog entry '" + name + "'");
}

Record expected_results(const std::string& name) { return find_entry(name).expected(); }

Record compute_record(const LieAlgebra& g, const BasePoint& z) {
  Record r;
  r.adapted = is_adapted(g, z.h_z);
  if (!*r.adapted) return r;
  SphericalAnalysis an = analyze(g, z.h_z);
  r.S_z = an.S_z;
  Cone c = compression_cone(g, an);
  std::vector<Vec> facets = c.facets();
  std::sort(facets.begin(), facets.end());
  r.cone_facets = facets;
  r.a_h_dim = an.a_h.dim();
  r.a_E_dim = c.edge().dim();
  LittleWeylGroup w = little_weyl_group(g, an);
  r.w_order = w.order;
  r.coxeter_type = w.coxeter_type;
  r.sigma_Z = spherical_roots(g, w).roots;
  r.admissible = admissibility(g, an).admissible;
  return r;
}

}  // namespace lwg
