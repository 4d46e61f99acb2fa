#ifndef HELMSENS_BATTERY_HPP
#define HELMSENS_BATTERY_HPP

#include <string>
#include <utility>
#include <vector>

#include "helmsens/verify.hpp"

namespace helmsens {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, double>> metrics;
  std::string note;
};

// Which displayed derivative-data formula each passing study vouches for.
struct CoverageEntry {
  std::string formula;
  std::vector<std::string> covered_by;
  bool covered = false;
};

struct BatteryReport {
  bool quick = false;
  std::vector<CriterionResult> criteria;
  std::vector<CoverageEntry> coverage;

  bool all_pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the full verification battery (criteria 1-8; report determinism is the
// caller's to check by serializing twice). quick trims the solver grids to a
// representative subset.
BatteryReport run_acceptance_battery(bool quick);

// Deterministic JSON rendering of the report.
std::string battery_json(const BatteryReport& rep);

}  // namespace helmsens

#endif
