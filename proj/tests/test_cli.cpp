#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "sixpoints/json_io.hpp"
#include "sixpoints/verify.hpp"

using namespace sixpoints;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the CLI binary (path from the build system) and captures stdout.
RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SIXPOINTS_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SIXPOINTS_BIN must point to the CLI binary");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/sixpoints_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("rationals parse from integers and strings, reject junk") {
  CHECK(io::rat_from_json(json(5)) == Rat(5));
  CHECK(io::rat_from_json(json("3/4")) == Rat(3, 4));
  CHECK(io::rat_from_json(json("-7")) == Rat(-7));
  CHECK_THROWS_AS(io::rat_from_json(json("1/0")), io::InputError);
  CHECK_THROWS_AS(io::rat_from_json(json("abc")), io::InputError);
  CHECK_THROWS_AS(io::rat_from_json(json(1.5)), io::InputError);
  CHECK(io::rat_to_json(Rat(22, 7)) == json("22/7"));
  CHECK(io::rat_to_json(Rat(-4)) == json("-4"));
}

TEST_CASE("point configurations validate their schema") {
  json good = {{"space", "P1"},
               {"points", json::array({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}})}};
  auto c = io::point_config_from_json(good);
  CHECK(c.dim == 1);
  CHECK(c.points[5][0] == Rat(5));

  CHECK_THROWS_AS(io::point_config_from_json(json::array()), io::InputError);
  json bad_space = good;
  bad_space["space"] = "P4";
  CHECK_THROWS_AS(io::point_config_from_json(bad_space), io::InputError);
  json five = good;
  five["points"].erase(0);
  CHECK_THROWS_AS(io::point_config_from_json(five), io::InputError);
  json wrong_len = good;
  wrong_len["points"][0] = json::array({1, 2, 3});
  CHECK_THROWS_AS(io::point_config_from_json(wrong_len), io::InputError);
  json zero_pt = good;
  zero_pt["points"][0] = json::array({0, 0});
  CHECK_THROWS_AS(io::point_config_from_json(zero_pt), io::InputError);
}

TEST_CASE("enumeration JSON has the advertised counts") {
  CHECK(io::enumeration_to_json("pentagons")["pentagons"].size() == 6);
  CHECK(io::enumeration_to_json("triangle-colorings")["triangle_colorings"].size() == 6);
  CHECK(io::enumeration_to_json("synthemes")["synthemes"].size() == 15);
  CHECK(io::enumeration_to_json("pentads")["pentads"].size() == 6);
  CHECK(io::enumeration_to_json("icosahedra")["icosahedra"].size() == 12);
  CHECK(io::enumeration_to_json("letter-dictionary")["letter_dictionary"].size() == 6);
  CHECK_THROWS_AS(io::enumeration_to_json("nonsense"), io::InputError);

  json pentads = io::enumeration_to_json("pentads");
  CHECK(pentads["pentads"][0]["synthemes"].size() == 5);
  json icos = io::enumeration_to_json("icosahedra");
  CHECK(icos["icosahedra"][0].contains("opposite"));
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  verify::RunOptions opt;
  opt.seed = 5;
  auto checks1 = verify::run_suite("kempe", opt);
  auto checks2 = verify::run_suite("kempe", opt);
  io::ReportOptions ropt;
  ropt.suite = "kempe";
  ropt.seed = 5;
  CHECK(io::run_report_to_json(checks1, ropt).dump() == io::run_report_to_json(checks2, ropt).dump());
  CHECK(verify::all_passed(checks1));
}

TEST_CASE("report embeds the frozen conventions") {
  verify::RunOptions opt;
  auto checks = verify::run_suite("segre", opt);
  io::ReportOptions ropt;
  ropt.suite = "segre";
  json rep = io::run_report_to_json(checks, ropt);
  CHECK(rep["constants"]["lambda_sto_i"] == "1/6");
  CHECK(rep["constants"]["kappa"] == 324);
  CHECK(rep["constants"]["kempe_constant"] == "1");
  CHECK(rep["constants"]["p3_rule"] == "R1");
  CHECK(rep["letter_dictionary"]["a"] == "12345");
  CHECK(rep["checks"].size() == checks.size());
}

TEST_CASE("unknown suite is rejected") {
  verify::RunOptions opt;
  CHECK_THROWS(verify::run_suite("everything", opt));
}

// ---- end-to-end through the binary ----

TEST_CASE("cli: enumerate pentads") {
  RunResult r = run_cli("enumerate pentads");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["pentads"].size() == 6);
  CHECK(j["pentads"][0]["synthemes"][0] == "12/35/46");
}

TEST_CASE("cli: outer in both directions and round trip") {
  RunResult r = run_cli("outer \"(1 2)\" --direction points-to-letters");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(a d)(b c)(e f)\n");

  RunResult inv = run_cli("outer \"(a d)(b c)(e f)\" --direction letters-to-points");
  CHECK(inv.exit_code == 0);
  CHECK(inv.out == "(1 2)\n");

  RunResult ident = run_cli("outer \"()\"");
  CHECK(ident.out == "()\n");

  RunResult round = run_cli("outer \"(1 2 3 4 5 6)\" --direction points-to-letters --json");
  json j = json::parse(round.out);
  RunResult back = run_cli("outer \"" + j["output"].get<std::string>() +
                           "\" --direction letters-to-points");
  CHECK(back.out == "(1 2 3 4 5 6)\n");
}

TEST_CASE("cli: invariants evaluates the segre map from a JSON file") {
  std::string path = write_temp(
      "p1.json",
      R"({"space":"P1","points":[[0,1],[1,1],[2,1],[3,1],[4,1],[5,1]]})");
  RunResult r = run_cli("invariants --map segre --points " + path);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["map"] == "segre");
  CHECK(j["sum"] == "0");
  CHECK(j["unstable"] == false);

  // conic configuration under p2 reports V = 0
  std::string conic = write_temp(
      "conic.json",
      R"({"space":"P2","points":[[1,0,0],[1,1,1],[1,2,4],[1,3,9],[1,4,16],[1,5,25]]})");
  RunResult rc = run_cli("invariants --map p2 --points " + conic);
  CHECK(rc.exit_code == 0);
  json jc = json::parse(rc.out);
  CHECK(jc["V"] == "0");
}

TEST_CASE("cli: input errors exit with code 2") {
  std::string path = write_temp(
      "p1b.json", R"({"space":"P1","points":[[0,1],[1,1],[2,1],[3,1],[4,1],[5,1]]})");
  CHECK(run_cli("invariants --map p2 --points " + path).exit_code == 2);  // dimension mismatch
  CHECK(run_cli("invariants --map segre --points /nonexistent.json").exit_code == 2);
  std::string bad = write_temp("bad.json", "{not json");
  CHECK(run_cli("invariants --map segre --points " + bad).exit_code == 2);
  std::string badrat = write_temp(
      "badrat.json", R"({"space":"P1","points":[["1/0",1],[1,1],[2,1],[3,1],[4,1],[5,1]]})");
  CHECK(run_cli("invariants --map segre --points " + badrat).exit_code == 2);
  CHECK(run_cli("enumerate nonsense").exit_code == 2);
  CHECK(run_cli("outer \"(1 7)\"").exit_code == 2);
}

TEST_CASE("cli: verify reports determinism and exit code 0 on pass") {
  RunResult r1 = run_cli("verify --suite kempe --seed 3");
  RunResult r2 = run_cli("verify --suite kempe --seed 3");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  json j = json::parse(r1.out);
  CHECK(j["all_passed"] == true);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
}
