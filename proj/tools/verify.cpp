// Command-line front end for the verification scenarios.
//
//   verify octonion | triality | lie | case <id> | all
//       [--seed N] [--samples N] [--budget N] [--params a,b,c]
//       [--out report.json] [--format json|text] [--timings]
//
// Exit code 0 iff every requested check passes.

#include "kfcl/caselab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Options {
  kfcl::ScenarioParams params;
  std::string out_path;
  std::string format = "text";
  bool timings = false;
};

void add_common_options(CLI::App* cmd, Options& opt,
                        std::vector<double>& abc) {
  cmd->add_option("--seed", opt.params.seed, "Random seed (default 42)");
  cmd->add_option("--samples", opt.params.samples,
                  "Orbit sample size (default 500)");
  cmd->add_option("--budget", opt.params.budget,
                  "Search evaluation budget (default 100000)");
  cmd->add_option("--params", abc,
                  "Scenario coefficients a,b,c (default 1,0.5,0.25)")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--out", opt.out_path, "Write the JSON report to this file");
  cmd->add_option("--format", opt.format, "Console output: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--timings", opt.timings,
                "Include wall-clock durations in the JSON report (off by "
                "default to keep reports reproducible)");
}

int run(const std::vector<std::string>& ids, const Options& opt) {
  kfcl::Report report;
  report.seed = opt.params.seed;
  for (const std::string& id : ids) {
    report.scenarios.push_back(kfcl::run_scenario(id, opt.params));
    report.all_pass = report.all_pass && report.scenarios.back().pass;
  }

  if (opt.format == "json") {
    std::cout << report.to_json(opt.timings).dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "verify: cannot write " << opt.out_path << "\n";
      return 2;
    }
    out << report.to_json(opt.timings).dump(2) << "\n";
  }
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical verification of the octonion/triality toolkit: algebra "
      "identities, spin generator sets, and the homogeneous-sphere "
      "constant-length scenarios."};
  app.require_subcommand(1);

  Options opt;
  std::vector<double> abc;
  std::string case_id;

  CLI::App* octonion =
      app.add_subcommand("octonion", "Octonion identity suite");
  CLI::App* triality =
      app.add_subcommand("triality", "Triality triple checks");
  CLI::App* lie =
      app.add_subcommand("lie", "Lie algebra generator and closure checks");
  CLI::App* one = app.add_subcommand("case", "Run a single scenario by id");
  one->add_option("id", case_id, "Scenario id")->required();
  CLI::App* all = app.add_subcommand("all", "Run every scenario");
  for (CLI::App* cmd : {octonion, triality, lie, one, all}) {
    add_common_options(cmd, opt, abc);
  }

  CLI11_PARSE(app, argc, argv);
  if (abc.size() == 3) opt.params.abc = {abc[0], abc[1], abc[2]};

  std::vector<std::string> ids;
  if (octonion->parsed()) ids = {"octonion_identities"};
  if (triality->parsed()) ids = {"triality_core"};
  if (lie->parsed()) ids = {"lie_dims"};
  if (all->parsed()) ids = kfcl::scenario_ids();
  if (one->parsed()) {
    const auto& known = kfcl::scenario_ids();
    if (std::find(known.begin(), known.end(), case_id) == known.end()) {
      std::cerr << "verify: unknown scenario '" << case_id
                << "'; valid ids are:\n";
      for (const std::string& id : known) std::cerr << "  " << id << "\n";
      return 2;
    }
    ids = {case_id};
  }

  try {
    return run(ids, opt);
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
}
