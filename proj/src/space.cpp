#include "lwg/space.hpp"

#include <fstream>
#include <sstream>

namespace lwg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? "/" : where) + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, "missing field '" + key + "'");
  return j.at(key);
}

long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

std::size_t count(const json& j, const std::string& where) {
  long v = integer(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

json intvecs_to_json(const std::vector<IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

IntVec intvec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  IntVec out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<IntVec> intvecs_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(intvec_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::string format_value(const json& j) { return j.dump(); }

}  // namespace

json rationals_to_json(const Vec& v) { return to_strings(v); }

Vec rationals_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rationals");
  Vec out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string at = where + "/" + std::to_string(i);
    if (j[i].is_number_integer()) {
      out.emplace_back(j[i].get<long>());
    } else if (j[i].is_string()) {
      try {
        out.push_back(parse_rational(j[i].get<std::string>()));
      } catch (const ParseError& e) {
        fail(at, e.what());
      }
    } else {
      fail(at, "expected a \"p/q\" string");
    }
  }
  return out;
}

json word_to_json(const std::vector<WordEntry>& word) {
  json out = json::array();
  for (const auto& e : word) {
    switch (e.kind) {
      case WordEntry::Kind::Nilpotent:
        out.push_back({{"kind", "nilpotent"}, {"vector", rationals_to_json(e.data)}});
        break;
      case WordEntry::Kind::Torus:
        out.push_back({{"kind", "torus"}, {"values", rationals_to_json(e.data)}});
        break;
      case WordEntry::Kind::Weyl: {
        IntVec one_based;
        for (long s : e.word) one_based.push_back(s + 1);
        out.push_back({{"kind", "weyl"}, {"word", one_based}});
        break;
      }
    }
  }
  return out;
}

std::vector<WordEntry> word_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of word entries");
  std::vector<WordEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string at = where + "/" + std::to_string(i);
    const json& kind = field(j[i], "kind", at);
    if (!kind.is_string()) fail(at + "/kind", "expected a string");
    WordEntry e;
    std::string k = kind.get<std::string>();
    if (k == "nilpotent") {
      e.kind = WordEntry::Kind::Nilpotent;
      e.data = rationals_from_json(field(j[i], "vector", at), at + "/vector");
    } else if (k == "torus") {
      e.kind = WordEntry::Kind::Torus;
      e.data = rationals_from_json(field(j[i], "values", at), at + "/values");
      for (std::size_t c = 0; c < e.data.size(); ++c)
        if (sgn(e.data[c]) <= 0) fail(at + "/values/" + std::to_string(c), "torus character values must be positive");
    } else if (k == "weyl") {
      e.kind = WordEntry::Kind::Weyl;
      for (long s : intvec_from_json(field(j[i], "word", at), at + "/word")) {
        if (s < 1) fail(at + "/word", "simple reflections are numbered from 1");
        e.word.push_back(s - 1);
      }
    } else {
      fail(at + "/kind", "unknown kind '" + k + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

json record_to_json(const Record& r) {
  json out = json::object();
  if (r.adapted) out["adapted"] = *r.adapted;
  if (r.S_z) out["S_z"] = intvecs_to_json(*r.S_z);
  if (r.cone_facets) {
    json f = json::array();
    for (const auto& v : *r.cone_facets) f.push_back(rationals_to_json(v));
    out["cone_facets"] = f;
  }
  if (r.a_h_dim) out["a_h_dim"] = *r.a_h_dim;
  if (r.a_E_dim) out["a_E_dim"] = *r.a_E_dim;
  if (r.w_order) out["w_order"] = *r.w_order;
  if (r.coxeter_type) out["coxeter_type"] = *r.coxeter_type;
  if (r.sigma_Z) out["sigma_Z"] = intvecs_to_json(*r.sigma_Z);
  if (r.admissible) out["admissible"] = *r.admissible;
  return out;
}

Record record_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  static const std::vector<std::string> known{"adapted", "S_z",        "cone_facets",  "a_h_dim",   "a_E_dim",
                                              "w_order", "coxeter_type", "sigma_Z", "admissible"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) fail(where + "/" + k, "unknown field");
  Record r;
  auto boolean = [&](const char* k) -> std::optional<bool> {
    if (!j.contains(k)) return std::nullopt;
    if (!j[k].is_boolean()) fail(where + "/" + k, "expected a boolean");
    return j[k].get<bool>();
  };
  auto size = [&](const char* k) -> std::optional<std::size_t> {
    if (!j.contains(k)) return std::nullopt;
    return count(j[k], where + "/" + k);
  };
  r.adapted = boolean("adapted");
  r.admissible = boolean("admissible");
  r.a_h_dim = size("a_h_dim");
  r.a_E_dim = size("a_E_dim");
  r.w_order = size("w_order");
  if (j.contains("S_z")) r.S_z = intvecs_from_json(j["S_z"], where + "/S_z");
  if (j.contains("sigma_Z")) r.sigma_Z = intvecs_from_json(j["sigma_Z"], where + "/sigma_Z");
  if (j.contains("coxeter_type")) {
    if (!j["coxeter_type"].is_string()) fail(where + "/coxeter_type", "expected a string");
    r.coxeter_type = j["coxeter_type"].get<std::string>();
  }
  if (j.contains("cone_facets")) {
    const json& f = j["cone_facets"];
    if (!f.is_array()) fail(where + "/cone_facets", "expected an array");
    r.cone_facets.emplace();
    for (std::size_t i = 0; i < f.size(); ++i)
      r.cone_facets->push_back(rationals_from_json(f[i], where + "/cone_facets/" + std::to_string(i)));
  }
  return r;
}

std::vector<std::string> compare_records(const Record& claimed, const Record& computed) {
  json c = record_to_json(claimed), d = record_to_json(computed);
  std::vector<std::string> out;
  for (const auto& [k, v] : c.items()) {
    if (!d.contains(k)) {
      out.push_back(k + ": claimed " + format_value(v) + ", not computed");
      continue;
    }
    if (d[k] != v) out.push_back(k + ": claimed " + format_value(v) + ", computed " + format_value(d[k]));
  }
  return out;
}

LieAlgebra SpaceDescription::algebra() const {
  if (!cartan_type.empty()) return LieAlgebra::from_type(cartan_type, center_dim);
  return LieAlgebra(cartan_matrix, center_dim);
}

Subspace SpaceDescription::reference(const LieAlgebra& g) const {
  for (std::size_t i = 0; i < subalgebra.size(); ++i)
    if (subalgebra[i].size() != g.dim())
      fail("/subalgebra/" + std::to_string(i), "row has " + std::to_string(subalgebra[i].size()) + " entries, expected " +
                                                   std::to_string(g.dim()));
  Subspace h = Subspace::span(g.dim(), subalgebra);
  if (!g.is_subalgebra(h)) fail("/subalgebra", "rows do not span a subalgebra");
  return h;
}

BasePoint SpaceDescription::base(const LieAlgebra& g) const {
  Subspace h = reference(g);
  for (std::size_t i = 0; i < base_point.size(); ++i) {
    const auto& e = base_point[i];
    std::string at = "/base_point/" + std::to_string(i);
    if (e.kind == WordEntry::Kind::Nilpotent && e.data.size() != g.dim()) fail(at, "nilpotent vector has wrong length");
    if (e.kind == WordEntry::Kind::Torus && e.data.size() != g.rank()) fail(at, "torus entry needs one value per simple root");
    if (e.kind == WordEntry::Kind::Weyl)
      for (long s : e.word)
        if (static_cast<std::size_t>(s) >= g.rank()) fail(at, "simple reflection index out of range");
  }
  try {
    return translate(g, h, base_point);
  } catch (const std::invalid_argument& e) {
    fail("/base_point", e.what());
  }
}

json space_to_json(const SpaceDescription& s) {
  json la = {{"center_dim", s.center_dim}};
  if (!s.cartan_type.empty()) la["cartan_type"] = s.cartan_type;
  else la["cartan_matrix"] = s.cartan_matrix;
  json rows = json::array();
  for (const auto& r : s.subalgebra) rows.push_back(rationals_to_json(r));
  json out = {{"schema_version", kSchemaVersion}, {"name", s.name},          {"lie_algebra", la},
              {"subalgebra", rows},              {"base_point", word_to_json(s.base_point)}};
  if (!s.note.empty()) out["note"] = s.note;
  if (s.claims) out["claims"] = record_to_json(*s.claims);
  return out;
}

SpaceDescription space_from_json(const json& j) {
  if (!j.is_object()) fail("", "expected an object");
  if (integer(field(j, "schema_version", ""), "/schema_version") != kSchemaVersion)
    fail("/schema_version", "unsupported schema version");
  SpaceDescription s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("/name", "expected a string");
    s.name = j["name"].get<std::string>();
  }
  const json& la = field(j, "lie_algebra", "");
  if (la.contains("cartan_type") == la.contains("cartan_matrix"))
    fail("/lie_algebra", "give exactly one of cartan_type and cartan_matrix");
  if (la.contains("cartan_type")) {
    if (!la["cartan_type"].is_string()) fail("/lie_algebra/cartan_type", "expected a string");
    s.cartan_type = la["cartan_type"].get<std::string>();
  } else {
    s.cartan_matrix = intvecs_from_json(la["cartan_matrix"], "/lie_algebra/cartan_matrix");
  }
  if (la.contains("center_dim")) s.center_dim = count(la["center_dim"], "/lie_algebra/center_dim");
  try {
    (void)s.algebra();
  } catch (const ParseError& e) {
    fail("/lie_algebra", e.what());
  }
  const json& rows = field(j, "subalgebra", "");
  if (!rows.is_array()) fail("/subalgebra", "expected an array of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) s.subalgebra.push_back(rationals_from_json(rows[i], "/subalgebra/" + std::to_string(i)));
  if (j.contains("base_point")) s.base_point = word_from_json(j["base_point"], "/base_point");
  if (j.contains("note")) {
    if (!j["note"].is_string()) fail("/note", "expected a string");
    s.note = j["note"].get<std::string>();
  }
  if (j.contains("claims")) s.claims = record_from_json(j["claims"], "/claims");
  for (const auto& [k, v] : j.items())
    if (k != "schema_version" && k != "name" && k != "lie_algebra" && k != "subalgebra" && k != "base_point" &&
        k != "note" && k != "claims")
      fail("/" + k, "unknown field");
  return s;
}

SpaceDescription load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return space_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace lwg
