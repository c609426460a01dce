// Command-line interface: enumerations, outer-automorphism queries, exact
// invariant evaluation from JSON point files, and the verification suite.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "sixpoints/json_io.hpp"
#include "sixpoints/moduli.hpp"
#include "sixpoints/mystic.hpp"
#include "sixpoints/perm.hpp"
#include "sixpoints/verify.hpp"

namespace {

using nlohmann::json;
using namespace sixpoints;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

int cmd_enumerate(const std::string& kind) {
  std::cout << io::enumeration_to_json(kind).dump(2) << "\n";
  return kExitPass;
}

int cmd_outer(const std::string& perm_text, const std::string& direction, bool as_json) {
  Perm input = parse_cycles(perm_text, 6);
  Perm output;
  bool letters_out;
  if (direction == "points-to-letters") {
    output = mystic::outer_via_triangles(input);
    letters_out = true;
  } else if (direction == "letters-to-points") {
    output = mystic::outer_via_cosets(input);
    letters_out = false;
  } else {
    throw io::InputError("direction must be points-to-letters or letters-to-points");
  }
  std::string formatted = format_cycles(output, letters_out);
  if (as_json) {
    json j;
    j["input"] = format_cycles(input, direction == "letters-to-points");
    j["direction"] = direction;
    j["output"] = formatted;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << formatted << "\n";
  }
  return kExitPass;
}

int cmd_invariants(const std::string& map_name, const std::string& points_file) {
  std::ifstream in(points_file);
  if (!in) throw io::InputError("cannot open points file '" + points_file + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw io::InputError(std::string("invalid JSON: ") + e.what());
  }
  moduli::PointConfig config = io::point_config_from_json(j);

  auto expect_dim = [&](int dim) {
    if (config.dim != dim)
      throw io::InputError("map '" + map_name + "' needs points in P" + std::to_string(dim) +
                           ", got P" + std::to_string(config.dim));
  };

  json out;
  out["map"] = map_name;
  if (map_name == "segre") {
    expect_dim(1);
    out.update(io::invariant_vector_to_json(moduli::segre_map(config)));
  } else if (map_name == "igusa-p1") {
    expect_dim(1);
    out.update(io::invariant_vector_to_json(moduli::igusa_p1_map(config)));
  } else if (map_name == "p2") {
    expect_dim(2);
    moduli::P2Result res = moduli::p2_map(config);
    out.update(io::invariant_vector_to_json(res.w));
    out["V"] = io::rat_to_json(res.v);
  } else if (map_name == "p3") {
    expect_dim(3);
    out.update(io::invariant_vector_to_json(moduli::p3_map(config, moduli::OrbitRule::R1)));
    out["orbit_rule"] = "R1";
  } else {
    throw io::InputError("unknown map '" + map_name + "' (expected segre, igusa-p1, p2, p3)");
  }
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, bool igusa_exact,
               bool timings) {
  verify::RunOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  opt.igusa_exact = igusa_exact;
  std::vector<verify::CheckResult> checks = verify::run_suite(suite, opt);
  io::ReportOptions ropt;
  ropt.suite = suite;
  ropt.seed = seed;
  ropt.trials = trials;
  ropt.timings = timings;
  std::cout << io::run_report_to_json(checks, ropt).dump(2) << "\n";
  return verify::all_passed(checks) ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact outer automorphism of S6 and invariants of six points in P1, P2, P3"};
  app.require_subcommand(1);

  std::string kind;
  auto* enumerate = app.add_subcommand("enumerate", "List combinatorial objects as JSON");
  enumerate
      ->add_option("kind", kind,
                   "pentagons | triangle-colorings | synthemes | pentads | icosahedra | "
                   "letter-dictionary")
      ->required();

  std::string perm_text, direction = "points-to-letters";
  bool outer_json = false;
  auto* outer = app.add_subcommand("outer", "Apply the outer automorphism to a permutation");
  outer->add_option("perm", perm_text, "cycle notation, e.g. \"(1 2)\" or \"(a d)(b c)(e f)\"")
      ->required();
  outer->add_option("--direction", direction, "points-to-letters (default) or letters-to-points");
  outer->add_flag("--json", outer_json, "wrap the result in JSON");

  std::string map_name, points_file;
  auto* invariants = app.add_subcommand("invariants", "Evaluate an invariant map on a point file");
  invariants->add_option("--map", map_name, "segre | igusa-p1 | p2 | p3")->required();
  invariants->add_option("--points", points_file, "JSON point configuration file")->required();

  std::string suite = "all";
  std::uint64_t seed = 0;
  int trials = 64;
  bool igusa_exact = false, timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks, print a JSON report");
  verify_cmd->add_option("--suite", suite,
                         "all | outer | reps | segre | igusa | duality | p2 | p3 | kempe");
  verify_cmd->add_option("--seed", seed, "seed for all sampled checks (default 0)");
  verify_cmd->add_option("--trials", trials, "identity-test trials (default 64)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--igusa-exact", igusa_exact, "also expand the quartic symbolically");
  verify_cmd->add_flag("--timings", timings, "embed wall-clock timings (breaks determinism)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*enumerate) return cmd_enumerate(kind);
    if (*outer) return cmd_outer(perm_text, direction, outer_json);
    if (*invariants) return cmd_invariants(map_name, points_file);
    if (*verify_cmd) return cmd_verify(suite, seed, trials, igusa_exact, timings);
    return kExitInputError;
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
