#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the gt binary through the shell, capturing stdout; stderr carries the
// human summary and is dropped here.
RunResult run_gt(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("GT_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = env_prefix.empty() ? "" : env_prefix + " ";
  cmd += "\"" + std::string(bin) + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("GT_DATA_DIR");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

json parse_report(const RunResult& r) {
  auto j = json::parse(r.out, nullptr, false);
  REQUIRE(!j.is_discarded());
  CHECK(j["format"] == "gt-report/1");
  CHECK(j["input"]["sha256"].get<std::string>().size() == 64);
  return j;
}

}  // namespace

TEST_CASE("wells report on the three-vertex path") {
  auto r = run_gt("wells " + data("p3.json"));
  REQUIRE(r.code == 0);
  auto j = parse_report(r);
  CHECK(j["command"] == "wells");
  CHECK(j["results"]["wells"] == json::array({"a", "c"}));
  CHECK(j["results"]["s0"] == 2);
  CHECK(j["warnings"].is_array());
}

TEST_CASE("reports are byte-identical across runs") {
  for (std::string args :
       {"wells " + data("p3.json"), "mu " + data("p3.json") + " --well a --hbar 0.1",
        "verify " + data("p3.json")}) {
    auto a = run_gt(args);
    auto b = run_gt(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("wells exit codes for degenerate inputs") {
  CHECK(run_gt("wells " + data("adjacent_wells.json")).code == 2);
  CHECK(run_gt("wells " + data("missing_file_zz.json")).code == 2);
  auto r = run_gt("wells " + data("single_vertex.json"));
  REQUIRE(r.code == 0);
  auto j = parse_report(r);
  CHECK(j["results"]["s0"].is_null());
}

TEST_CASE("spectrum in csv and dirichlet modes") {
  auto full = run_gt("spectrum " + data("p3.json") + " --hbar 0.1 --format csv");
  REQUIRE(full.code == 0);
  CHECK(full.out.rfind("index,eigenvalue\n", 0) == 0);
  CHECK(std::count(full.out.begin(), full.out.end(), '\n') == 4);  // header + 3 rows

  auto res = run_gt("spectrum " + data("p3.json") + " --hbar 0.1 --dirichlet-well a --format csv");
  REQUIRE(res.code == 0);
  CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 3);  // header + 2 rows

  CHECK(run_gt("spectrum " + data("p3.json") + " --hbar 0.1 --dirichlet-well zz").code == 2);
  CHECK(run_gt("spectrum " + data("p3.json") + " --hbar 0.1 --dirichlet-well b").code == 2);
}

TEST_CASE("mu report carries the oracle comparison and the sign note") {
  auto r = run_gt("mu " + data("p3.json") + " --well a --hbar 0.1");
  REQUIRE(r.code == 0);
  auto j = parse_report(r);
  CHECK(j["parameters"]["hbar"] == 0.1);
  CHECK(j["parameters"]["max_path_len_defaulted"] == true);
  double mu = j["results"]["mu"].get<double>();
  CHECK(std::abs(mu - (0.5 - 0.5 * std::sqrt(1.0 + 4e-4))) <= 1e-12);
  CHECK(mu < 0.0);
  CHECK(j["results"]["mu_vs_dirichlet"].get<double>() <= 1e-12);
  CHECK(j["results"]["leading_order"]["sum_inverse_potential"] == 1.0);
  std::string note = j["results"]["sign_note"].get<std::string>();
  CHECK(note.find("negative") != std::string::npos);
  CHECK(note.find("positive") != std::string::npos);

  auto explicit_len = run_gt("mu " + data("p3.json") + " --well a --hbar 0.1 --max-path-len 8");
  auto j2 = parse_report(explicit_len);
  CHECK(j2["parameters"]["max_path_len_defaulted"] == false);
  CHECK(j2["parameters"]["max_path_len"] == 8);
}

TEST_CASE("mu failure exit codes") {
  CHECK(run_gt("mu " + data("p3.json") + " --well b --hbar 0.1").code == 2);
  CHECK(run_gt("mu " + data("p3.json") + " --well a --hbar 10").code == 3);
  CHECK(run_gt("mu " + data("p3.json") + " --well a --hbar 0.1 --max-path-len -3").code == 2);
}

TEST_CASE("interaction report in both modes") {
  auto lead = run_gt("interaction " + data("p3.json") + " --hbar 0.1");
  REQUIRE(lead.code == 0);
  auto j = parse_report(lead);
  CHECK(j["parameters"]["mode"] == "leading");
  double r01 = j["results"]["offdiag"][0][1].get<double>();
  CHECK(std::abs(r01 + 1e-4) <= 1e-12);
  CHECK(j["results"]["interaction_eigenvalues"].size() == 2);
  CHECK(j["results"]["exact_eigenvalues"].size() == 2);

  auto appx = run_gt("interaction " + data("p3.json") + " --hbar 0.1 --mode appendixA");
  REQUIRE(appx.code == 0);
  auto ja = parse_report(appx);
  CHECK(ja["results"]["max_difference"].get<double>() <= 2e-8);
  CHECK(ja["results"]["dist_fe"].get<double>() <=
        ja["results"]["dist_bound"].get<double>() + 1e-12);

  // The detached well pairs are reported, not silently zeroed.
  auto three = run_gt("interaction " + data("three_level.json") + " --hbar 0.1");
  REQUIRE(three.code == 0);
  auto jt = parse_report(three);
  REQUIRE(jt["warnings"].size() >= 1);
  std::string w = jt["warnings"][0].get<std::string>();
  CHECK(w.find("no length-S0 path") != std::string::npos);
  CHECK(w.find("vanishes") != std::string::npos);
}

TEST_CASE("verify passes on the bundled examples") {
  auto r = run_gt("verify " + data("p3.json"));
  REQUIRE(r.code == 0);
  auto j = parse_report(r);
  CHECK(j["results"]["pass"] == true);
  CHECK(j["results"]["threshold"] == 5.75);
  CHECK(j["results"]["hbars"].size() == 4);
  CHECK(j["results"]["hbars"][3] == 0.025);  // the endpoint is hit exactly

  CHECK(run_gt("verify " + data("p3.json") + " --steps 1").code == 2);
  CHECK(run_gt("verify " + data("p3.json") + " --hbar-max 0.1 --hbar-min 0.2").code == 2);
  CHECK(run_gt("verify " + data("p3.json") + " --hbar-max 10 --hbar-min 5").code == 3);
  CHECK(run_gt("verify " + data("single_vertex.json")).code == 2);
}

TEST_CASE("anneal fits the gap order") {
  auto r = run_gt("anneal " + data("landscape_double_min.json"));
  REQUIRE(r.code == 0);
  auto j = parse_report(r);
  CHECK(j["parameters"]["temps_defaulted"] == true);
  CHECK(j["results"]["points"].size() == 5);
  CHECK(j["results"]["fit"]["rounded_even_exponent"] == 4);
  CHECK(j["results"]["fit"]["fit_residual"].get<double>() < 0.1);
  CHECK(j["results"]["diagnostics"]["stationarity_residual_max"].get<double>() <= 1e-12);
  CHECK(j["results"]["diagnostics"]["conjugation_relative_difference_max"].get<double>() <=
        1e-12);
  CHECK(j["results"]["diagnostics"]["zero_mode_residual_max"].get<double>() <= 1e-10);

  auto two = run_gt("anneal " + data("landscape_double_min.json") + " --temps 0.5,0.25");
  REQUIRE(two.code == 0);
  auto jt = parse_report(two);
  CHECK(jt["results"]["fit"].is_null());
  REQUIRE(jt["warnings"].size() == 1);

  CHECK(run_gt("anneal " + data("landscape_flat_edge.json")).code == 2);
  CHECK(run_gt("anneal " + data("landscape_disconnected.json")).code == 3);
}

TEST_CASE("report digits are adjustable through the environment") {
  const std::string args = "mu " + data("p3.json") + " --well a --hbar 0.1";
  auto full = run_gt(args);
  auto six = run_gt(args, "GT_REPORT_DIGITS=6");
  REQUIRE(six.code == 0);
  CHECK(six.out != full.out);
  auto j = json::parse(six.out);
  double mu = j["results"]["mu"].get<double>();
  CHECK(std::abs(mu - (-9.999e-05)) <= 1e-9);
  CHECK(run_gt(args, "GT_REPORT_DIGITS=0").code == 2);
  CHECK(run_gt(args, "GT_REPORT_DIGITS=18").code == 2);
  CHECK(run_gt(args, "GT_REPORT_DIGITS=abc").code == 2);
}

TEST_CASE("csv output for wells") {
  auto r = run_gt("wells " + data("c6.json") + " --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("from,to,distance\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);  // header + 3 pairs
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run_gt("").code == 2);
  CHECK(run_gt("frobnicate x.json").code == 2);
  CHECK(run_gt("mu " + data("p3.json") + " --hbar 0.1").code == 2);  // --well missing
  CHECK(run_gt("--help").code == 0);
  CHECK(run_gt("interaction " + data("p3.json") + " --hbar 0.1 --mode bogus").code == 2);
}
