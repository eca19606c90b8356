#pragma once

#include "kfcl/serialize.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace kfcl {

struct ScenarioParams {
  std::uint64_t seed = 42;
  int samples = 500;
  std::int64_t budget = 100000;
  /// The (a, b, c) coefficients consumed by the line and ellipsoid scenarios.
  std::array<double, 3> abc = {1.0, 0.5, 0.25};
  /// Fault-injection hook for the generator-rank negative control; used by
  /// the test suite only.
  bool corrupt_generators = false;
};

struct ScenarioResult {
  std::string id;
  bool pass = true;
  std::map<std::string, double> residuals;
  nlohmann::json witnesses = nlohmann::json::object();
  std::uint64_t seed = 0;
  double duration_ms = 0.0;
  std::vector<std::string> notes;
};

/// The ten scenario ids in report order.
const std::vector<std::string>& scenario_ids();

/// One-line description of the computation each scenario verifies.
const std::map<std::string, std::string>& scenario_manifest();

/// Runs one scenario. Unknown ids throw std::invalid_argument.
ScenarioResult run_scenario(const std::string& id,
                            const ScenarioParams& params = {});

struct Report {
  std::vector<ScenarioResult> scenarios;
  bool all_pass = true;
  std::uint64_t seed = 0;

  /// Canonical JSON. Wall-clock durations are volatile and therefore left
  /// out unless include_timings is set; everything else reproduces bit for
  /// bit under a fixed seed.
  nlohmann::json to_json(bool include_timings = false) const;
  std::string to_text() const;
};

Report run_all(const ScenarioParams& params = {});

}  // namespace kfcl
