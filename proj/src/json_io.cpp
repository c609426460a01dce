#include "sixpoints/json_io.hpp"

#include "sixpoints/frozen.hpp"
#include "sixpoints/mystic.hpp"

namespace sixpoints::io {

namespace {

using namespace sixpoints::mystic;

json letter_dictionary_json() {
  json d = json::object();
  for (const Pentagon& p : enumerate_pentagons())
    d[std::string(1, letter_name(p.letter))] = white_cycle_str(p);
  return d;
}

json edges_json(std::uint16_t mask) {
  json out = json::array();
  for (int e = 0; e < 10; ++e)
    if (mask >> e & 1) {
      auto [i, j] = edge_vertices(e);
      out.push_back(json::array({i, j}));
    }
  return out;
}

json triples_json(std::uint32_t mask) {
  json out = json::array();
  for (int t = 0; t < 20; ++t)
    if (mask >> t & 1) {
      auto v = triangle_vertices(t);
      out.push_back(json::array({v[0], v[1], v[2]}));
    }
  return out;
}

json syntheme_json(const Syntheme& s) {
  json out = json::array();
  for (const auto& pr : s.pairs) out.push_back(json::array({pr[0], pr[1]}));
  return out;
}

}  // namespace

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected an integer or a \"num/den\" string, got " + j.dump());
}

json rat_to_json(const Rat& r) { return r.str(); }

moduli::PointConfig point_config_from_json(const json& j) {
  if (!j.is_object()) throw InputError("point configuration must be a JSON object");
  if (!j.contains("space") || !j["space"].is_string())
    throw InputError("missing \"space\" (one of \"P1\", \"P2\", \"P3\")");
  std::string space = j["space"].get<std::string>();
  moduli::PointConfig c;
  if (space == "P1") c.dim = 1;
  else if (space == "P2") c.dim = 2;
  else if (space == "P3") c.dim = 3;
  else throw InputError("unknown space \"" + space + "\"");
  if (!j.contains("points") || !j["points"].is_array() || j["points"].size() != 6)
    throw InputError("\"points\" must be an array of exactly 6 points");
  for (int i = 0; i < 6; ++i) {
    const json& pt = j["points"][size_t(i)];
    if (!pt.is_array() || int(pt.size()) != c.dim + 1)
      throw InputError("point " + std::to_string(i + 1) + " must have " +
                       std::to_string(c.dim + 1) + " coordinates for " + space);
    auto& coords = c.points[size_t(i)];
    coords.clear();
    for (const json& coord : pt) coords.push_back(rat_from_json(coord));
  }
  try {
    c.validate();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return c;
}

json invariant_vector_to_json(const moduli::InvariantVector& v) {
  json values = json::object();
  for (int x = 0; x < 6; ++x)
    values[std::string(1, letter_name(x))] = rat_to_json(v.values[size_t(x)]);
  json out;
  out["values"] = values;
  out["sum"] = rat_to_json(v.sum());
  out["unstable"] = v.is_zero();
  return out;
}

json kempe_vector_to_json(const moduli::KempeVector& x) {
  json values = json::object();
  for (const auto& entry : moduli::kempe_dictionary()) {
    auto it = x.values.find(entry.oriented.underlying());
    if (it == x.values.end()) continue;
    values[entry.oriented.str()] = rat_to_json(it->second);
  }
  json out;
  out["values"] = values;
  return out;
}

json enumeration_to_json(const std::string& kind) {
  json out;
  if (kind == "pentagons") {
    json list = json::array();
    for (const Pentagon& p : enumerate_pentagons()) {
      json e;
      e["letter"] = std::string(1, letter_name(p.letter));
      json cyc = json::array();
      for (int v : p.white_cycle) cyc.push_back(v);
      e["white_cycle"] = cyc;
      e["white_edges"] = edges_json(p.white_mask);
      e["black_edges"] = edges_json(p.black_mask);
      list.push_back(e);
    }
    out["pentagons"] = list;
  } else if (kind == "triangle-colorings") {
    json list = json::array();
    for (const Pentagon& p : enumerate_pentagons()) {
      TriangleColoring c = canonical_colorings()[size_t(p.letter)];
      json e;
      e["letter"] = std::string(1, letter_name(p.letter));
      e["black"] = triples_json(c.black);
      e["white"] = triples_json(c.white());
      list.push_back(e);
    }
    out["triangle_colorings"] = list;
  } else if (kind == "synthemes") {
    json list = json::array();
    for (const Syntheme& s : enumerate_synthemes()) {
      json e;
      e["label"] = s.str();
      e["pairs"] = syntheme_json(s);
      list.push_back(e);
    }
    out["synthemes"] = list;
  } else if (kind == "pentads") {
    json list = json::array();
    for (const Pentagon& p : enumerate_pentagons()) {
      Pentad pd = pentad_of_pentagon(p);
      json e;
      e["letter"] = std::string(1, letter_name(p.letter));
      json syn = json::array();
      for (const Syntheme& s : pd.synthemes) syn.push_back(s.str());
      e["synthemes"] = syn;
      list.push_back(e);
    }
    out["pentads"] = list;
  } else if (kind == "icosahedra") {
    json list = json::array();
    const auto& icos = enumerate_icosahedra();
    for (int i = 0; i < int(icos.size()); ++i) {
      json e;
      e["id"] = i;
      e["triples"] = triples_json(icos[size_t(i)].triples);
      e["opposite"] = icos[size_t(i)].opposite;
      e["pentagon"] = std::string(1, letter_name(icos[size_t(i)].pentagon_letter));
      list.push_back(e);
    }
    out["icosahedra"] = list;
  } else if (kind == "letter-dictionary") {
    out["letter_dictionary"] = letter_dictionary_json();
  } else {
    throw InputError("unknown enumeration kind '" + kind +
                     "' (expected pentagons, triangle-colorings, synthemes, pentads, "
                     "icosahedra or letter-dictionary)");
  }
  return out;
}

json run_report_to_json(const std::vector<verify::CheckResult>& checks, const ReportOptions& opt) {
  json out;
  out["artifact"] = "sixpoints";
  out["version"] = "1.0.0";
  out["suite"] = opt.suite;
  out["seed"] = opt.seed;
  out["trials"] = opt.trials;
  out["letter_dictionary"] = letter_dictionary_json();

  json constants;
  constants["lambda_sto_i"] = frozen::kLambdaStoI;
  constants["p2_w_scale"] = frozen::kP2WScale;
  constants["kappa"] = frozen::kKappa;
  constants["p2_conic_constant"] = frozen::kP2ConicConstant;
  constants["kempe_constant"] = frozen::kKempeConstant;
  json orient = json::array();
  for (const char* s : frozen::kKempeOrientations) orient.push_back(s);
  constants["kempe_orientations"] = orient;
  constants["cross_ratio_points"] =
      json::array({frozen::kCrossRatioPoints[0], frozen::kCrossRatioPoints[1],
                   frozen::kCrossRatioPoints[2], frozen::kCrossRatioPoints[3]});
  constants["p3_rule"] = frozen::kP3SelectedRule;
  constants["coset_alignment"] = frozen::kCosetAlignment;
  out["constants"] = constants;

  json list = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["status"] = c.status;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.data.empty()) {
      json d = json::object();
      for (const auto& [k, v] : c.data) d[k] = v;
      e["data"] = d;
    }
    if (opt.timings) e["ms"] = c.ms;
    if (c.status == "fail") ok = false;
    list.push_back(e);
  }
  out["checks"] = list;
  out["all_passed"] = ok;
  return out;
}

}  // namespace sixpoints::io
