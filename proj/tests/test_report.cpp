#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lwg/catalog.hpp"
#include "lwg/report.hpp"

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace lwg;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(LWG_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/lwg_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("reports round-trip through JSON") {
  for (const auto& e : list_entries()) {
    CAPTURE(e.name());
    Report r = build_report(e.space);
    std::string text = report_to_json(r).dump();
    Report back = report_from_json(json::parse(text));
    CHECK(back == r);
    CHECK(report_to_json(back).dump() == text);
    // every rational is a string
    std::function<void(const json&)> walk = [&](const json& j) {
      CHECK_FALSE(j.is_number_float());
      if (j.is_structured())
        for (const auto& c : j) walk(c);
    };
    walk(json::parse(text));
    CHECK(json::parse(text)["schema_version"] == kSchemaVersion);
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  ReportOptions o;
  o.seed = 7;
  for (const char* name : {"A2_so3", "A1T1_fz"}) {
    CAPTURE(name);
    CHECK(report_to_json(build_report(find_entry(name).space, o)).dump() ==
          report_to_json(build_report(find_entry(name).space, o)).dump());
  }
}

TEST_CASE("report blocks match the catalog") {
  Report r = build_report(find_entry("A1xA1_diag_w0").space);
  REQUIRE(r.weyl);
  CHECK(r.weyl->order == 2);
  REQUIRE(r.weyl->generators.size() == 1);
  CHECK(r.weyl->generators[0].witness == "pair");
  CHECK(r.weyl->cosets == r.weyl->limit_cosets);
  CHECK(r.sigma_Z->roots == std::vector<IntVec>{{-1, -1}, {1, 1}});
  CHECK(r.verification_passed());
  CHECK(r.diagnostics().empty());
}

TEST_CASE("report parse errors") {
  json j = report_to_json(build_report(find_entry("A1_so2").space));
  j["schema_version"] = 99;
  CHECK_THROWS_AS(report_from_json(j), ParseError);
  j = report_to_json(build_report(find_entry("A1_so2").space));
  j.erase("space");
  CHECK_THROWS_AS(report_from_json(j), ParseError);
}

TEST_CASE("cli analyze") {
  auto a = run("analyze A1_nbar");
  CHECK(a.code == 0);
  CHECK(a.out.find("compression cone: all of a; little Weyl group: trivial") != std::string::npos);

  auto j = run("analyze A1_so2 --json");
  CHECK(j.code == 0);
  Report r = report_from_json(json::parse(j.out));
  CHECK(r.weyl->order == 2);
  CHECK(run("analyze A1_so2 --json --seed 3").out == run("analyze A1_so2 --json --seed 3").out);
  CHECK(run("--json analyze A2_so3").out == run("analyze A2_so3 --json").out);
}

TEST_CASE("cli exit codes") {
  // h = a in sl2: a + p is not all of g
  std::string cartan = temp_file("cartan.json", R"({"schema_version": 1, "name": "sl2_a",
    "lie_algebra": {"cartan_type": "A1", "center_dim": 0}, "subalgebra": [["0", "1", "0"]], "base_point": []})");
  Run r = run("analyze " + cartan);
  CHECK(r.code == 2);
  CHECK(r.out.find("no open P-orbit") != std::string::npos);
  CHECK(json::parse(run("analyze " + cartan + " --json").out)["adaptedness"]["reason"] == "no_open_P_orbit");

  std::string broken = temp_file("broken.json", R"({"schema_version": 1, "name": "x",
    "lie_algebra": {"cartan_type": "A1", "center_dim": 0}, "subalgebra": [["0", "1/0", "0"]], "base_point": []})");
  CHECK(run("analyze " + broken).code == 1);
  std::string err = "/tmp/lwg_test_err";
  CHECK(std::system((std::string(LWG_CLI) + " analyze " + broken + " 2> " + err + " > /dev/null").c_str()) != 0);
  std::ifstream in(err);
  std::string msg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(msg.find("/subalgebra/0/1") != std::string::npos);

  CHECK(run("analyze no_such_space").code == 1);
  CHECK(run("limit A1_so2 --direction 1,2").code == 1);
  CHECK(run("limit A1_so2 --direction x").code == 1);
  CHECK(run("analyze A1_so2 --m-lattice spin").code == 1);
  CHECK(run("bogus").code == 1);

  std::string tampered = temp_file("tampered.json", [] {
    SpaceDescription s = find_entry("A2_so3").space;
    s.claims->w_order = 3;
    return space_to_json(s).dump();
  }());
  Run v = run("verify " + tampered);
  CHECK(v.code == 3);
  CHECK(v.out.find("w_order: claimed 3, computed 6") != std::string::npos);
}

TEST_CASE("cli limit") {
  Run a = run("limit A1_nbar --direction 1");
  CHECK(a.code == 0);
  CHECK(a.out.find("span(f1)") != std::string::npos);
  CHECK(a.out.find("coset: e\n") != std::string::npos);
  Run b = run("limit A1_so2 --direction 1 --json");
  json j = json::parse(b.out);
  CHECK(j["limit"] == json::parse(R"([["0", "0", "1"]])"));
  CHECK(j["cosets"] == json::parse(R"(["s1"])"));
  Run c = run("limit A1_so2 --direction 0 --json");
  CHECK(json::parse(c.out)["unchanged"] == true);
}

TEST_CASE("cli degenerate, admissible, verify and catalog") {
  Run d = run("degenerate A2_so3 --json");
  CHECK(d.code == 0);
  CHECK(json::parse(d.out)["faces"].size() == 4);
  CHECK(run("degenerate A2_so3 --direction 1,1").code == 1);

  Run a = run("admissible A1T1_fz --json --max-iters 10");
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["found"] == true);

  Run v = run("verify --all --json");
  CHECK(v.code == 0);
  json jv = json::parse(v.out);
  CHECK(jv["passed"] == true);
  CHECK(jv["results"].size() == list_entries().size());

  Run l = run("catalog list --json");
  CHECK(json::parse(l.out)["entries"].size() == list_entries().size());
  std::string path = "/tmp/lwg_test_export.json";
  CHECK(run("catalog export A1xA1_diag_w0 -o " + path).code == 0);
  CHECK(load_space_file(path) == find_entry("A1xA1_diag_w0").space);
  CHECK(run("analyze " + path + " --json").out == run("analyze A1xA1_diag_w0 --json").out);
}
