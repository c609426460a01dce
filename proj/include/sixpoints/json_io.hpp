#ifndef SIXPOINTS_JSON_IO_HPP
#define SIXPOINTS_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sixpoints/moduli.hpp"
#include "sixpoints/verify.hpp"

namespace sixpoints::io {

using nlohmann::json;

// Malformed input (schema, rationals, dimensions); maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);  // "num/den" string, or plain string for integers

// {"space": "P1"|"P2"|"P3", "points": [[coord, ...] x 6]}
moduli::PointConfig point_config_from_json(const json& j);

json invariant_vector_to_json(const moduli::InvariantVector& v);
json kempe_vector_to_json(const moduli::KempeVector& x);

json enumeration_to_json(const std::string& kind);  // CLI `enumerate`

struct ReportOptions {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 64;
  bool timings = false;  // embed wall-clock times (breaks byte determinism)
};
json run_report_to_json(const std::vector<verify::CheckResult>& checks, const ReportOptions& opt);

}  // namespace sixpoints::io

#endif
