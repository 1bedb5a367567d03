// Property batteries behind `verify` and the acceptance suite: one function
// per criterion, deterministic for a given seed, aggregated into suites.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skeinlab {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  long cases = 0;
  double ms = 0;
  std::string detail;                 // shown on the human channel
  std::vector<std::string> failures;  // serialized failing inputs
};

// The ten acceptance criteria. scale multiplies randomized sample counts;
// exhaustive parts are unaffected. Each runs against its own derived seed.
CriterionResult criterion_skein_oracle(uint64_t seed, int scale);        // 1
CriterionResult criterion_relative_battery(uint64_t seed, int scale);    // 2
CriterionResult criterion_decomposition(uint64_t seed, int scale);       // 3
CriterionResult criterion_valuation_axioms(uint64_t seed, int scale);    // 4
CriterionResult criterion_domination(uint64_t seed, int scale);          // 5
CriterionResult criterion_braid(uint64_t seed, int scale);               // 6
CriterionResult criterion_coxeter(uint64_t seed, int scale);             // 7
CriterionResult criterion_fan_whang(uint64_t seed, int scale);           // 8
CriterionResult criterion_central_signs(uint64_t seed, int scale);       // 9
CriterionResult criterion_fibers(uint64_t seed, int scale);              // 10

struct RunReport {
  std::string suite;
  uint64_t seed = 0;
  int scale = 1;
  long cases = 0;
  std::vector<CriterionResult> results;
  double wall_ms = 0;  // human channel only; omitted from the JSON payload

  bool ok() const;
};

// Known suites: skein-oracle, valuation-axioms, domination, braid, coxeter,
// signs, actions, all. Throws std::invalid_argument("unknown suite") else.
RunReport run_suite(const std::string& name, uint64_t seed, int scale);

std::vector<std::string> suite_names();

// Canonical report JSON: byte-identical for identical (suite, seed, scale).
std::string report_json(const RunReport& report);
std::string report_text(const RunReport& report);

}  // namespace skeinlab
