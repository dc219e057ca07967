// Copyright 2026 The qsse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qsse/commands.hpp"
#include "qsse/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitUsage = 2;

qsse::Scenario resolve_scenario(const std::string& ref) {
  if (std::filesystem::exists(ref)) {
    return qsse::load_scenario(ref);
  }
  for (const auto& name : qsse::builtin_scenario_names()) {
    if (name == ref) {
      return qsse::build_scenario(ref);
    }
  }
  throw qsse::Error("unknown scenario '" + ref + "' (not a builtin, not a file)");
}

void apply_overrides(qsse::Scenario& sc, const std::optional<std::uint64_t>& seed,
                     const std::optional<double>& dt, const std::optional<int>& ntraj) {
  if (seed) sc.plan.seed = *seed;
  if (dt) sc.plan.dt = *dt;
  if (ntraj) sc.plan.n_traj = *ntraj;
}

void emit(const nlohmann::json& report, const std::string& report_path) {
  std::cout << report.dump(2) << std::endl;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      throw qsse::Error("cannot write report file: " + report_path);
    }
    out << report.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic unravelings of GKLS master equations: classify "
               "dissipative generators, simulate trajectory ensembles, and "
               "validate them against the exact evolution."};
  app.require_subcommand(1);

  std::string scenario_ref;
  std::string matrix_file;
  std::string out_dir = ".";
  std::string report_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> dt;
  std::optional<int> ntraj;
  std::optional<double> tol;
  bool traj_dump = false;

  auto* classify = app.add_subcommand("classify", "Dephasing/decay taxonomy of a scenario");
  classify->add_option("scenario", scenario_ref, "builtin name or scenario file")->required();
  classify->add_option("--tol", tol, "classification tolerance");
  classify->add_option("--report", report_path, "also save the report to a file");

  auto* simulate = app.add_subcommand("simulate", "Run a trajectory ensemble, emit CSV");
  simulate->add_option("scenario", scenario_ref, "builtin name or scenario file")->required();
  simulate->add_option("--seed", seed, "override the plan seed");
  simulate->add_option("--dt", dt, "override the step size");
  simulate->add_option("--ntraj", ntraj, "override the trajectory count");
  simulate->add_option("--out", out_dir, "output directory for CSV files");
  simulate->add_flag("--traj-dump", traj_dump, "also dump one raw trajectory's norms");
  simulate->add_option("--report", report_path, "also save the report to a file");

  auto* compare = app.add_subcommand("compare", "Ensemble vs exact master-equation evolution");
  compare->add_option("scenario", scenario_ref, "builtin name or scenario file")->required();
  compare->add_option("--seed", seed, "override the plan seed");
  compare->add_option("--dt", dt, "override the step size");
  compare->add_option("--ntraj", ntraj, "override the trajectory count");
  compare->add_option("--tol", tol, "override the max-distance tolerance");
  compare->add_option("--report", report_path, "also save the report to a file");

  auto* reduce = app.add_subcommand("noise-reduce", "Minimal real-noise reduction of a covariance");
  reduce->add_option("matrix", matrix_file, "JSON covariance matrix file")->required();
  reduce->add_option("--report", report_path, "also save the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (classify->parsed()) {
      qsse::Scenario sc = resolve_scenario(scenario_ref);
      emit(qsse::cmd_classify(sc, tol.value_or(qsse::kTolSuperop)), report_path);
      return kExitPass;
    }
    if (simulate->parsed()) {
      qsse::Scenario sc = resolve_scenario(scenario_ref);
      apply_overrides(sc, seed, dt, ntraj);
      std::filesystem::create_directories(out_dir);
      emit(qsse::cmd_simulate(sc, out_dir, traj_dump), report_path);
      return kExitPass;
    }
    if (compare->parsed()) {
      qsse::Scenario sc = resolve_scenario(scenario_ref);
      apply_overrides(sc, seed, dt, ntraj);
      if (tol) sc.tolerances.compare_max_distance = *tol;
      const qsse::CompareOutcome outcome = qsse::cmd_compare(sc);
      emit(outcome.report, report_path);
      return outcome.passed ? kExitPass : kExitToleranceFailure;
    }
    if (reduce->parsed()) {
      emit(qsse::cmd_noise_reduce(qsse::load_covariance(matrix_file)), report_path);
      return kExitPass;
    }
  } catch (const qsse::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << std::endl;
    return kExitToleranceFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  }
  return kExitUsage;
}
