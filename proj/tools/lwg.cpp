#include "CLI11.hpp"
#include "lwg/catalog.hpp"
#include "lwg/invariants.hpp"
#include "lwg/limits.hpp"
#include "lwg/report.hpp"

#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace lwg;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 1, kNotAdapted = 2, kContract = 3 };

struct Flags {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t max_iters = 10;
  std::string lattice = "coroot";

  ReportOptions options() const {
    ReportOptions o;
    o.seed = seed;
    o.max_iters = max_iters;
    o.lattice = lattice == "coweight" ? MLattice::Coweight : MLattice::Coroot;
    return o;
  }
};

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    for (const auto& r : rows_) {
      std::string line = " ";
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += " " + r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 1, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      os << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

template <typename T>
std::string join(const std::vector<T>& items, const std::string& sep, const std::function<std::string(const T&)>& f) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + f(items[i]);
  return out;
}

std::string roots(const std::vector<IntVec>& rs) {
  if (rs.empty()) return "none";
  return join<IntVec>(rs, " ", format_intvec);
}

std::string vecs(const std::vector<Vec>& vs) {
  if (vs.empty()) return "none";
  return join<Vec>(vs, " ", [](const Vec& v) { return to_string(v); });
}

std::string signs(const std::vector<int>& s) {
  std::string out;
  for (int x : s) out += x > 0 ? '+' : (x < 0 ? '-' : '0');
  return out;
}

// Linear form on a-coordinates x1, x2, ...
std::string linear_form(const Vec& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sgn(f[i]) == 0) continue;
    if (first)
      os << (sgn(f[i]) < 0 ? "-" : "");
    else
      os << (sgn(f[i]) < 0 ? " - " : " + ");
    Rational a = abs(f[i]);
    if (a != 1) os << a.get_str() << " ";
    os << "x" << i + 1;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string span_of(const LieAlgebra& g, const std::vector<Vec>& basis) {
  if (basis.empty()) return "0";
  return "span(" + join<Vec>(basis, ", ", [&](const Vec& v) { return g.describe(v); }) + ")";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string reason_text(std::string r) {
  std::replace(r.begin(), r.end(), '_', ' ');
  auto p = r.find(" P ");
  if (p != std::string::npos) r.replace(p, 3, " P-");
  return r;
}

SpaceDescription resolve(const std::string& arg) {
  for (const auto& e : list_entries())
    if (e.name() == arg) return e.space;
  if (!std::filesystem::exists(arg)) throw ParseError(arg + ": no catalog entry or file with this name");
  SpaceDescription s = load_space_file(arg);
  try {
    LieAlgebra g = s.algebra();
    (void)s.base(g);
  } catch (const ParseError& e) {
    throw ParseError(arg + ": " + e.what());
  }
  return s;
}

Vec parse_direction(const std::string& text, std::size_t n) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) items.push_back(item);
  Vec x;
  try {
    x = parse_vec(items);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--direction: ") + e.what());
  }
  if (x.size() != n)
    throw ParseError("--direction: expected " + std::to_string(n) + " coordinates, got " + std::to_string(x.size()));
  return x;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string cone_summary(const ReportCone& c) {
  if (c.whole) return "all of a";
  return join<Vec>(c.inequalities, ", ", [](const Vec& f) { return linear_form(f) + " <= 0"; });
}

std::string weyl_summary(const ReportWeyl& w) {
  if (w.order == 1) return "trivial";
  return w.coxeter_type + ", order " + std::to_string(w.order);
}

void print_checks(const std::vector<CheckResult>& checks, const std::string& entry = "") {
  Table t(entry.empty() ? std::vector<std::string>{"check", "cases", "result", "counterexample"}
                        : std::vector<std::string>{"space", "check", "cases", "result", "counterexample"});
  for (const auto& c : checks) {
    std::vector<std::string> row{c.name, std::to_string(c.cases), c.passed ? "PASS" : "FAIL", c.detail};
    if (!entry.empty()) row.insert(row.begin(), entry);
    t.add(row);
  }
  t.print(std::cout);
}

void print_report(const Report& r, const LieAlgebra& g) {
  std::cout << "space: " << r.space.name << " ("
            << (r.space.cartan_type.empty() ? "Cartan matrix" : r.space.cartan_type)
            << (r.space.center_dim ? " + " + std::to_string(r.space.center_dim) + "-dim center" : "")
            << "), dim h_z = " << r.space.dim << "\n";
  std::cout << "h_z = " << span_of(g, r.space.subalgebra) << "\n";
  if (!r.adaptedness.adapted) {
    std::cout << "adapted: no (" << reason_text(r.adaptedness.reason) << ")\n";
    return;
  }
  std::cout << "compression cone: " << cone_summary(*r.cone) << "; little Weyl group: " << weyl_summary(*r.weyl)
            << "\n\n";

  std::cout << "parabolic Q\n";
  Table q({"Sigma0", "Sigma(Q)", "dim l_Q", "dim l_nc", "dim n_Q"});
  q.add({roots(r.q->sigma0), roots(r.q->sigmaQ), std::to_string(r.q->l_Q_dim), std::to_string(r.q->l_nc_dim),
         std::to_string(r.q->n_Q_dim)});
  q.print(std::cout);

  std::cout << "\nT_z\n";
  Table t({"alpha", "T(f_alpha)", "support", "a-part"});
  for (const auto& s : r.t->supports) t.add({format_intvec(s.alpha), g.describe(s.T), roots(s.roots), yes(s.a)});
  t.print(std::cout);
  std::cout << "  S_z: " << roots(r.t->S_z) << "\n  indecomposables: " << roots(r.t->indecomposables)
            << "\n  a_h: " << vecs(r.t->a_h) << "\n  dim h_empty: " << r.t->h_empty_dim << "\n";

  std::cout << "\ncompression cone\n  inequalities: " << (r.cone->whole ? "none" : cone_summary(*r.cone))
            << "\n  rays: " << vecs(r.cone->rays) << "\n  edge a_E: " << vecs(r.cone->edge) << "\n";
  for (const auto& w : r.cone->walls) std::cout << "  wall " << linear_form(w.normal) << " = 0\n";

  std::cout << "\nadmissibility at the base point: " << yes(r.admissibility->admissible) << "\n";
  Table a({"chamber", "point", "dim limit", "dim limit cap a", "ok"});
  for (const auto& c : r.admissibility->chambers)
    a.add({signs(c.signs), to_string(c.point), std::to_string(c.limit.size()), std::to_string(c.a_dim), yes(c.ok)});
  a.print(std::cout);
  std::cout << "  search: " << (r.admissibility->search_found ? "found" : "not found") << " by "
            << r.admissibility->search_method << " after " << r.admissibility->search_samples << " samples\n";

  std::cout << "\nlittle Weyl group: " << weyl_summary(*r.weyl) << "\n";
  Table w({"wall", "sigma", "witness", "beta", "gamma", "a_h witness", "word"});
  for (const auto& gen : r.weyl->generators)
    w.add({linear_form(gen.wall) + " = 0", format_intvec(gen.sigma), gen.witness, format_intvec(gen.beta),
           gen.gamma.empty() ? "-" : format_intvec(gen.gamma),
           gen.a_h_witness.empty() ? "-" : to_string(gen.a_h_witness), format_intvec(gen.word)});
  if (!r.weyl->generators.empty()) w.print(std::cout);
  auto labels = [](const std::vector<std::string>& v) {
    return v.empty() ? std::string("none") : join<std::string>(v, " ", [](const std::string& s) { return s; });
  };
  std::cout << "  cosets (walls): " << labels(r.weyl->cosets) << "\n  cosets (limits): "
            << labels(r.weyl->limit_cosets) << "\n  tiling: " << yes(r.weyl->tiling) << "\n";

  std::cout << "\nspherical roots: " << roots(r.sigma_Z->roots) << "\n  lattice basis: "
            << roots(r.sigma_Z->lattice_basis) << "\n";

  if (!r.verification.empty()) {
    std::cout << "\nverification\n";
    print_checks(r.verification);
  }
}

int cmd_analyze(const std::string& arg, const Flags& f) {
  SpaceDescription s = resolve(arg);
  Report r = build_report(s, f.options());
  if (f.json)
    print_json(report_to_json(r));
  else
    print_report(r, s.algebra());
  if (!r.adaptedness.adapted) {
    std::cerr << "not adapted at the base point: " << reason_text(r.adaptedness.reason) << "\n";
    return kNotAdapted;
  }
  for (const auto& d : r.diagnostics()) std::cerr << "diagnostic: " << d << "\n";
  if (!r.diagnostics().empty() || !r.verification_passed()) return kContract;
  return kOk;
}

int cmd_limit(const std::string& arg, const std::string& direction, const Flags& f) {
  SpaceDescription s = resolve(arg);
  LieAlgebra g = s.algebra();
  BasePoint z = s.base(g);
  Vec x = parse_direction(direction, g.a_dim());
  Subspace lim = limit_subspace(g, z.h_z, x);
  std::optional<std::vector<std::string>> cosets;
  if (is_adapted(g, z.h_z)) cosets = match_cosets(g, analyze(g, z.h_z), lim, f.options().lattice);
  std::size_t a_dim = lim.intersect(g.a()).dim();
  if (f.json) {
    json j{{"schema_version", kSchemaVersion}, {"space", s.name}, {"direction", x}, {"limit", lim.basis()},
           {"dim", lim.dim()}, {"a_dim", a_dim}, {"unchanged", lim == z.h_z},
           {"order_regular", is_order_regular(g, x)}, {"cosets", cosets}};
    print_json(j);
    return kOk;
  }
  std::cout << "h_z,X = " << span_of(g, lim.basis()) << (lim == z.h_z ? "  (h_z unchanged)" : "") << "\n";
  std::cout << "dim h_z,X = " << lim.dim() << ", dim(h_z,X cap a) = " << a_dim
            << ", order-regular: " << yes(is_order_regular(g, x)) << "\n";
  if (!cosets)
    std::cout << "coset: n/a (base point not adapted)\n";
  else if (cosets->empty())
    std::cout << "coset: none\n";
  else
    std::cout << "coset: " << join<std::string>(*cosets, " ", [](const std::string& c) { return c; }) << "\n";
  return kOk;
}

int cmd_degenerate(const std::string& arg, const std::string& direction, const Flags& f) {
  SpaceDescription s = resolve(arg);
  LieAlgebra g = s.algebra();
  BasePoint z = s.base(g);
  SphericalAnalysis an = analyze(g, z.h_z);
  Cone c = compression_cone(g, an);
  std::vector<Cone> faces = c.faces();
  if (!direction.empty()) {
    Vec x = parse_direction(direction, g.a_dim());
    std::vector<Cone> picked;
    for (const auto& face : faces)
      if (face.contains_relative_interior(x)) picked.push_back(face);
    if (picked.empty()) throw ParseError("--direction: not in the closed compression cone");
    faces = picked;
  }
  json out = json::array();
  for (const auto& face : faces) {
    DegenerationData d = boundary_degeneration(g, an, face);
    Subspace a_f = g.normalizer_in_a(d.h_zF);
    if (f.json) {
      out.push_back({{"face_rays", face.rays()}, {"face_lineality", face.lineality().basis()},
                     {"face_dim", face.dim()}, {"monoid_generators", d.monoid_generators},
                     {"h_zF", d.h_zF.basis()}, {"a_F", a_f.basis()}});
      continue;
    }
    std::cout << "face of dim " << face.dim() << ": rays " << vecs(face.rays()) << ", lineality "
              << vecs(face.lineality().basis()) << "\n  monoid generators: " << roots(d.monoid_generators)
              << "\n  h_z,F = " << span_of(g, d.h_zF.basis()) << "\n  a_F = N_a(h_z,F): " << vecs(a_f.basis())
              << "\n";
  }
  if (f.json) print_json({{"schema_version", kSchemaVersion}, {"space", s.name}, {"faces", out}});
  return kOk;
}

int cmd_admissible(const std::string& arg, const Flags& f) {
  SpaceDescription s = resolve(arg);
  LieAlgebra g = s.algebra();
  BasePoint z = s.base(g);
  if (!is_adapted(g, z.h_z)) throw NotAdapted(check_adapted(g, z.h_z).reason);
  FindResult r = find_admissible(g, z, f.seed, f.max_iters);
  if (f.json) {
    json chambers = json::array();
    for (const auto& c : r.report.chambers)
      chambers.push_back(ReportChamber{c.signs, c.point, c.limit.basis(), c.a_dim, c.ok});
    print_json({{"schema_version", kSchemaVersion}, {"space", s.name}, {"found", r.found}, {"method", r.method},
                {"samples", r.samples}, {"word", word_to_json(r.point.word)}, {"chambers", chambers}});
  } else {
    std::cout << "admissible point: " << (r.found ? "found" : "not found") << " by " << r.method << " after "
              << r.samples << " samples\n";
    std::cout << "h_z' = " << span_of(g, r.point.h_z.basis()) << "\n";
    Table t({"chamber", "point", "dim limit cap a", "ok"});
    for (const auto& c : r.report.chambers) t.add({signs(c.signs), to_string(c.point), std::to_string(c.a_dim), yes(c.ok)});
    t.print(std::cout);
  }
  if (!r.found) {
    std::cerr << "no admissible point within " << f.max_iters << " samples\n";
    return kContract;
  }
  return kOk;
}

int cmd_verify(const std::string& arg, bool all, std::size_t limit_suite, const Flags& f) {
  std::vector<std::pair<std::string, std::vector<CheckResult>>> results;
  if (all)
    for (const auto& e : list_entries()) results.emplace_back(e.name(), verify_catalog_entry(e, f.seed));
  if (!arg.empty()) {
    bool in_catalog = false;
    for (const auto& e : list_entries())
      if (e.name() == arg) {
        results.emplace_back(arg, verify_catalog_entry(e, f.seed));
        in_catalog = true;
      }
    if (!in_catalog) {
      SpaceDescription s = resolve(arg);
      LieAlgebra g = s.algebra();
      auto checks = verify_space(g, s.base(g), f.seed);
      checks.push_back(verify_claims(s));
      results.emplace_back(s.name.empty() ? arg : s.name, checks);
    }
  }
  if (limit_suite > 0) results.emplace_back("limit_suite", std::vector<CheckResult>{verify_limit_suite(f.seed, limit_suite)});
  if (results.empty()) throw ParseError("verify: give a space, --all or --limit-suite");
  bool passed = true;
  for (const auto& [name, checks] : results)
    for (const auto& c : checks) passed = passed && c.passed;
  if (f.json) {
    json j{{"schema_version", kSchemaVersion}, {"passed", passed}, {"results", json::object()}};
    for (const auto& [name, checks] : results) j["results"][name] = checks;
    print_json(j);
  } else {
    for (const auto& [name, checks] : results) print_checks(checks, name);
    std::cout << (passed ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return passed ? kOk : kContract;
}

int cmd_catalog_list(const Flags& f) {
  if (f.json) {
    json j = json::array();
    for (const auto& e : list_entries())
      j.push_back({{"name", e.name()}, {"cartan_type", e.space.cartan_type}, {"center_dim", e.space.center_dim},
                   {"expected", record_to_json(e.expected())}, {"note", e.quasi_affine_note}});
    print_json({{"schema_version", kSchemaVersion}, {"entries", j}});
    return kOk;
  }
  Table t({"name", "algebra", "|W|", "type", "note"});
  for (const auto& e : list_entries()) {
    std::string alg = e.space.cartan_type + (e.space.center_dim ? " + center " + std::to_string(e.space.center_dim) : "");
    t.add({e.name(), alg, std::to_string(*e.expected().w_order), *e.expected().coxeter_type, e.quasi_affine_note});
  }
  t.print(std::cout);
  return kOk;
}

int cmd_catalog_export(const std::string& name, const std::string& path) {
  const CatalogEntry* entry = nullptr;
  for (const auto& e : list_entries())
    if (e.name() == name) entry = &e;
  if (!entry) throw ParseError(name + ": no catalog entry with this name");
  std::string text = space_to_json(entry->space).dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot write file");
  out << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compression cones, little Weyl groups and spherical roots of real spherical spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--json", f.json, "Machine-readable output");
  app.add_option("--seed", f.seed, "Random seed")->capture_default_str();
  app.add_option("--max-iters", f.max_iters, "Samples for the admissible-point search")->capture_default_str();
  app.add_option("--m-lattice", f.lattice, "Lattice for the sign characters of M")
      ->check(CLI::IsMember({"coroot", "coweight"}))
      ->capture_default_str();

  std::string space, direction, export_path;
  bool all = false;
  std::size_t limit_suite = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline at the base point");
  analyze_cmd->add_option("space", space, "Catalog name or space file")->required();

  auto* limit_cmd = app.add_subcommand("limit", "Limit of h_z along a direction X in a");
  limit_cmd->add_option("space", space, "Catalog name or space file")->required();
  limit_cmd->add_option("--direction", direction, "a-coordinates, e.g. \"1,-1/2\"")->required();

  auto* degenerate_cmd = app.add_subcommand("degenerate", "Boundary degenerations over the faces of the cone");
  degenerate_cmd->add_option("space", space, "Catalog name or space file")->required();
  degenerate_cmd->add_option("--direction", direction, "Only the face containing this point in its relative interior");

  auto* admissible_cmd = app.add_subcommand("admissible", "Search for an admissible point");
  admissible_cmd->add_option("space", space, "Catalog name or space file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("space", space, "Catalog name or space file");
  verify_cmd->add_flag("--all", all, "Every catalog entry");
  verify_cmd->add_option("--limit-suite", limit_suite, "Random (E, X) limit instances to check");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in example spaces");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->fallthrough();
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List the entries");
  auto* export_cmd = catalog_cmd->add_subcommand("export", "Write an entry as a space file");
  export_cmd->add_option("name", space, "Entry name")->required();
  export_cmd->add_option("-o,--output", export_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(space, f);
    if (limit_cmd->parsed()) return cmd_limit(space, direction, f);
    if (degenerate_cmd->parsed()) return cmd_degenerate(space, direction, f);
    if (admissible_cmd->parsed()) return cmd_admissible(space, f);
    if (verify_cmd->parsed()) return cmd_verify(space, all, limit_suite, f);
    if (list_cmd->parsed()) return cmd_catalog_list(f);
    if (export_cmd->parsed()) return cmd_catalog_export(space, export_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotAdapted& e) {
    std::cerr << "not adapted at the base point: " << reason_text(e.reason()) << "\n";
    return kNotAdapted;
  } catch (const std::exception& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return kContract;
  }
  return kOk;
}
