// Acceptance suite: runs every verification check once and groups the
// results into the twelve acceptance criteria, printing one line each with
// its wall-clock budget. Exit code 0 iff every criterion holds ("unresolved"
// is tolerated only for the conditional criterion 12).

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "sixpoints/verify.hpp"

using sixpoints::verify::CheckResult;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
  double budget_ms;
  bool conditional = false;  // criterion 12: "unresolved" does not fail the suite
};

const std::vector<Criterion> kCriteria = {
    {1,
     "enumeration counts by independent brute force (6/6/15/6/12)",
     {"enumerate.counts"},
     1000},
    {2,
     "outer automorphism: homomorphism on 720x720, bijective, non-inner, mutual inverse",
     {"outer.s5_embedding", "outer.homomorphism", "outer.bijective", "outer.noninner",
      "outer.inverse"},
     5000},
    {3, "pentad of pentagon a, misprint corrected and reported", {"outer.pentads"}, 5000},
    {4,
     "icosahedron route: pair bijection, equivariance, golden-ratio conjugation",
     {"icosa.pairs", "icosa.equivariance", "icosa.golden", "outer.stabilizer"},
     1000},
    {5,
     "characters: norms, orthogonality, restriction, twelve-variable construction",
     {"chars.norms", "chars.orthogonality", "chars.twelve_variable", "chars.restriction",
      "chars.intertwine", "chars.color_swap"},
     1000},
    {6, "Segre identities sum Z = 0 and sum Z^3 = 0, full symbolic expansion",
     {"segre.linear", "segre.cubic"}, 5000},
    {7,
     "Igusa identities: sum W = 0 symbolically, quartic by 64-trial identity test",
     {"igusa.linear", "igusa.quartic"},
     30000},
    {8, "duality: round trip and the frozen constant lambda on 50 seeded configurations",
     {"duality.lambda", "duality.roundtrip"}, 10000},
    {9,
     "(P2)^6: conic V = 0, double cover with 324 on 100 configurations, conic restriction",
     {"p2.conic_v", "p2.double_cover", "p2.conic_match"},
     60000},
    {10, "Kempe: symbolic X = (Z_x+Z_y)/2 table and 50 round trips",
     {"kempe.symbolic", "kempe.roundtrip", "kempe.arrows"}, 10000},
    {11,
     "equivariance: segre with the sign character, igusa_p1 and p2 without",
     {"equivariance.segre", "equivariance.igusa", "equivariance.p2"},
     10000},
    {12,
     "(P3)^6 orbit formula matches the moduli oracle on 25 curve configurations",
     {"p3.sum", "p3.oracle", "p3.unstable"},
     60000,
     true},
};

}  // namespace

int main() {
  sixpoints::verify::RunOptions opt;
  opt.seed = 0;
  opt.trials = 64;
  opt.igusa_exact = true;  // run the optional exact expansion as well

  std::vector<CheckResult> results = sixpoints::verify::run_suite("all", opt);
  std::map<std::string, const CheckResult*> by_name;
  for (const CheckResult& r : results) by_name[r.name] = &r;

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    double ms = 0;
    bool ok = true, unresolved = false;
    std::string why;
    for (const std::string& name : c.checks) {
      auto it = by_name.find(name);
      if (it == by_name.end()) {
        ok = false;
        why = "missing check " + name;
        continue;
      }
      ms += it->second->ms;
      if (it->second->status == "unresolved") {
        unresolved = true;
        why = it->second->detail;
      } else if (!it->second->passed()) {
        ok = false;
        why = name + ": " + it->second->detail;
      }
    }
    if (ok && ms > c.budget_ms) {
      ok = false;
      why = "exceeded time budget";
    }
    const char* verdict = ok ? (unresolved ? "UNRESOLVED" : "PASS") : "FAIL";
    if (!ok) ++failures;
    if (unresolved && c.conditional && ok) verdict = "UNRESOLVED (reported; criteria 1-11 unaffected)";
    std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs)\n", verdict, c.number,
                c.title.c_str(), ms / 1000.0, c.budget_ms / 1000.0);
    if (!why.empty() && (!ok || unresolved)) std::printf("        -> %s\n", why.c_str());
  }

  // The optional exact Igusa expansion runs outside criterion 7's budget.
  if (auto it = by_name.find("igusa.quartic_exact"); it != by_name.end()) {
    std::printf("[%s] extra: Igusa quartic by full symbolic expansion (%.2fs)\n",
                it->second->passed() ? "PASS" : "FAIL", it->second->ms / 1000.0);
    if (!it->second->passed()) ++failures;
  }

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
