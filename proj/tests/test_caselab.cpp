#include "kfcl/caselab.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kfcl;

TEST_SUITE_BEGIN("caselab");

TEST_CASE("the scenario list is closed and fully described") {
  const std::vector<std::string> expected = {
      "octonion_identities", "triality_core",   "lie_dims",
      "u_ellipsoid",         "sp_no_kfcl",      "spsp1_round",
      "g2_zero",             "spin7_line",      "spin7_symmetric",
      "spin9_contradiction"};
  CHECK(scenario_ids() == expected);
  // Manifest covers exactly the scenario set.
  const auto& manifest = scenario_manifest();
  CHECK(manifest.size() == expected.size());
  for (const std::string& id : expected) {
    REQUIRE(manifest.count(id) == 1);
    CHECK_FALSE(manifest.at(id).empty());
  }
  CHECK_THROWS_AS(run_scenario("not_a_scenario"), std::invalid_argument);
}

TEST_CASE("block-rotation conjugation scenario is exact") {
  const ScenarioResult r = run_scenario("spin9_contradiction");
  CHECK(r.pass);
  CHECK(r.residuals.at("conjugation_exact") == 0.0);
  CHECK(r.residuals.at("projection_before") == 0.0);
  CHECK(r.residuals.at("projection_after") == 0.0);
  // The witness carries the conjugated matrix and both projections.
  CHECK(r.witnesses.contains("conjugated"));
  CHECK(r.witnesses.at("projection_after")[0] == 0.0);
}

TEST_CASE("line scenario with equal coefficients hits four distinct values") {
  ScenarioParams p;
  p.abc = {1.0, 1.0, 1.0};
  const ScenarioResult r = run_scenario("spin7_line", p);
  CHECK(r.pass);
  // {+-1 +-1 +-1} collapses to {-3, -1, 1, 3}.
  CHECK(r.witnesses.at("distinct_values") == 4);
  std::set<double> values;
  for (const auto& w : r.witnesses.at("targets")) {
    values.insert(w.at("value").get<double>());
  }
  CHECK(values == std::set<double>{-3.0, -1.0, 1.0, 3.0});
}

TEST_CASE("generator fault injection fails the rank checks") {
  ScenarioParams p;
  p.corrupt_generators = true;
  const ScenarioResult r = run_scenario("lie_dims", p);
  CHECK_FALSE(r.pass);
  CHECK(r.residuals.at("rank_s1") >= 1.0);
  // An explanation is recorded rather than a silent failure.
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("fast scenarios pass with reduced budgets") {
  ScenarioParams p;
  p.samples = 200;
  const ScenarioResult ellipsoid = run_scenario("u_ellipsoid", p);
  CHECK(ellipsoid.pass);
  const ScenarioResult sp = run_scenario("sp_no_kfcl", p);
  CHECK(sp.pass);
  CHECK(sp.residuals.at("proportionality_ratio") > 0.0);
  CHECK(sp.residuals.at("proportionality_ratio") < 1.0);
  const ScenarioResult round = run_scenario("spsp1_round", p);
  CHECK(round.pass);
  const ScenarioResult zero = run_scenario("g2_zero", p);
  CHECK(zero.pass);
}

TEST_CASE("scenario JSON is deterministic and schema-complete") {
  ScenarioParams p;
  p.samples = 120;
  Report a, b;
  a.seed = b.seed = p.seed;
  for (const char* id : {"spin9_contradiction", "u_ellipsoid"}) {
    a.scenarios.push_back(run_scenario(id, p));
    b.scenarios.push_back(run_scenario(id, p));
  }
  CHECK(a.to_json().dump() == b.to_json().dump());

  const nlohmann::json j = a.to_json();
  CHECK(j.contains("all_pass"));
  CHECK(j.contains("seed"));
  for (const auto& s : j.at("scenarios")) {
    CHECK(s.contains("scenario_id"));
    CHECK(s.contains("pass"));
    CHECK(s.contains("residuals"));
    CHECK(s.contains("witnesses"));
    CHECK(s.contains("seed"));
    CHECK_FALSE(s.contains("duration_ms"));  // volatile, opt-in only
  }
  const nlohmann::json timed = a.to_json(true);
  CHECK(timed.at("scenarios")[0].contains("duration_ms"));
}

TEST_CASE("text report names failures") {
  ScenarioParams p;
  p.corrupt_generators = true;
  Report r;
  r.seed = p.seed;
  r.scenarios.push_back(run_scenario("lie_dims", p));
  r.all_pass = r.scenarios.back().pass;
  const std::string text = r.to_text();
  CHECK(text.find("[FAIL] lie_dims") != std::string::npos);
  CHECK(text.find("SOME SCENARIOS FAILED") != std::string::npos);
}

TEST_SUITE_END();
