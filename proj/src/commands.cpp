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

#include "qsse/commands.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qsse/classifier.hpp"
#include "qsse/noise.hpp"

namespace qsse {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write CSV file: " + path);
  }
  for (std::size_t c = 0; c < header.size(); ++c) {
    out << (c ? "," : "") << header[c];
  }
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << fmt17(row[c]);
    }
    out << "\n";
  }
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) {
    throw Error("covariance file: empty matrix");
  }
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw Error("covariance file: ragged matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& cell = j[r][c];
      if (cell.is_number()) {
        m(r, c) = Complex(cell.get<double>(), 0.0);
      } else if (cell.is_array() && cell.size() == 2) {
        m(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
      } else {
        throw Error("covariance file: entries are numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

double bloch_component(const DensityMatrix& rho, int alpha) {
  return (rho * pauli(alpha)).trace().real();
}

}  // namespace

json cmd_classify(const Scenario& scenario, double tol) {
  const GklsGenerator g = make_generator(scenario);
  const ClassificationReport report = classify_generator(g, tol);

  // Cross-checks the chain the verdict relies on.
  if (report.classical_noise_dilation && !report.generator_self_dual) {
    throw InternalInconsistency("classify: dilation claimed for a non-self-dual generator");
  }
  if (report.generator_self_dual) {
    if (!report.hermitian_decomposition.has_value()) {
      throw InternalInconsistency("classify: self-dual generator without a decomposition");
    }
    for (const auto& x : *report.hermitian_decomposition) {
      if (!is_hermitian(x, 1e-9)) {
        throw InternalInconsistency("classify: non-Hermitian member in the decomposition");
      }
    }
  }

  json out;
  out["scenario"] = scenario.name;
  out["generator_self_dual"] = report.generator_self_dual;
  out["classical_noise_dilation"] = report.classical_noise_dilation;
  out["channels_commute"] = report.channels_commute;
  out["overcomplete_channel_set"] = g.overcomplete();
  json channels = json::array();
  for (const auto& verdict : report.per_channel) {
    json ch;
    ch["kind"] = verdict.kind == ChannelKind::Dephasing ? "dephasing" : "decay";
    if (verdict.self_dual_phase.has_value()) {
      ch["self_dual_phase"] = *verdict.self_dual_phase;
    } else {
      ch["self_dual_phase"] = nullptr;
    }
    ch["has_stable_basis"] = verdict.stable_basis.has_value();
    channels.push_back(std::move(ch));
  }
  out["per_channel"] = std::move(channels);
  if (report.hermitian_decomposition.has_value()) {
    json decomposition = json::array();
    for (const auto& x : *report.hermitian_decomposition) {
      decomposition.push_back(matrix_to_json(x));
    }
    out["hermitian_decomposition"] = std::move(decomposition);
  } else {
    out["hermitian_decomposition"] = nullptr;
  }
  return out;
}

json cmd_simulate(const Scenario& scenario, const std::string& out_dir,
                  bool traj_dump) {
  if (scenario.plan.n_traj < 1) {
    throw Error("simulate: the trajectory count must be at least 1");
  }
  const SsePlan plan = make_plan(scenario);
  const StateVector psi0 = make_initial_state(scenario);
  const EnsembleResult ens = run_ensemble(plan, psi0, scenario.plan.n_traj);

  json report;
  report["scenario"] = scenario.name;
  report["n_traj"] = ens.n_traj;
  report["seed"] = scenario.plan.seed;
  json warnings = json::array();
  std::vector<std::string> files;

  const bool osc = scenario.oscillator();
  std::vector<std::string> header{"t"};
  std::vector<std::vector<double>> rows;
  if (scenario.dim == 2) {
    header.insert(header.end(), {"x1", "x2", "x3", "mean_norm_sq"});
  } else {
    for (int p = 0; p < scenario.dim; ++p) {
      header.push_back("p" + std::to_string(p));
    }
    if (osc) {
      header.push_back("leakage");
    }
    header.push_back("mean_norm_sq");
  }
  double leakage_max = 0.0;
  for (std::size_t r = 0; r < ens.times.size(); ++r) {
    std::vector<double> row{ens.times[r]};
    const DensityMatrix& rho = ens.rho_series[r];
    if (scenario.dim == 2) {
      row.push_back(bloch_component(rho, 1));
      row.push_back(bloch_component(rho, 2));
      row.push_back(bloch_component(rho, 3));
    } else {
      for (int p = 0; p < scenario.dim; ++p) {
        row.push_back(rho(p, p).real());
      }
      if (osc) {
        const double leak = rho(scenario.dim - 1, scenario.dim - 1).real();
        leakage_max = std::max(leakage_max, leak);
        row.push_back(leak);
      }
    }
    row.push_back(ens.mean_norm_sq[r]);
    rows.push_back(std::move(row));
  }
  const std::string ens_path = out_dir + "/" + scenario.name + "_ensemble.csv";
  write_csv(ens_path, header, rows);
  files.push_back(ens_path);

  if (osc) {
    report["leakage_max"] = leakage_max;
    if (leakage_max > 0.01) {
      warnings.push_back("Fock truncation leakage exceeded 1% (max " +
                         fmt17(leakage_max) + "); results near the cutoff are suspect");
    }
  }

  if (traj_dump) {
    const TrajectoryRecord rec = run_trajectory(plan, psi0, 0);
    std::vector<std::vector<double>> traj_rows;
    traj_rows.reserve(rec.times.size());
    for (std::size_t r = 0; r < rec.times.size(); ++r) {
      traj_rows.push_back({rec.times[r], rec.norms_sq[r]});
    }
    const std::string traj_path = out_dir + "/" + scenario.name + "_trajectory.csv";
    write_csv(traj_path, {"t", "norm_sq"}, traj_rows);
    files.push_back(traj_path);
    report["trajectory_seed"] = rec.seed_used;
  }

  report["mean_norm_sq_final"] = ens.mean_norm_sq.back();
  report["csv_files"] = files;
  report["warnings"] = std::move(warnings);
  return report;
}

CompareOutcome cmd_compare(const Scenario& scenario) {
  if (scenario.plan.n_traj < 1) {
    throw Error("compare: the trajectory count must be at least 1");
  }
  const GklsGenerator g = make_generator(scenario);
  const SsePlan plan = make_plan(scenario);
  const StateVector psi0 = make_initial_state(scenario);
  const DensityMatrix rho0 = psi0 * psi0.adjoint();

  const EnsembleResult ens = run_ensemble(plan, psi0, scenario.plan.n_traj);
  const std::vector<double> distances = compare_to_exact(ens, g, rho0);
  double max_dist = 0.0;
  for (double d : distances) {
    max_dist = std::max(max_dist, d);
  }

  json report;
  report["scenario"] = scenario.name;
  report["n_traj"] = ens.n_traj;
  report["seed"] = scenario.plan.seed;
  report["max_trace_distance"] = max_dist;
  report["final_trace_distance"] = distances.back();

  bool passed = max_dist <= scenario.tolerances.compare_max_distance;

  const std::vector<DensityMatrix> stationary = stationary_states(g);
  json stat;
  stat["basis_size"] = stationary.size();
  if (stationary.size() == 1) {
    const std::vector<DensityMatrix> exact_final =
        evolve_exact(g, rho0, {ens.times.back()});
    const double d_exact = trace_distance(exact_final.front(), stationary.front());
    const double d_ens = trace_distance(ens.rho_series.back(), stationary.front());
    stat["distance_exact_final"] = d_exact;
    stat["distance_ensemble_final"] = d_ens;
    // Only gate on the ensemble when the exact path has itself converged;
    // otherwise t_final is simply too early for a stationary check.
    if (d_exact <= 0.5 * scenario.tolerances.stationary_distance) {
      passed = passed && d_ens <= scenario.tolerances.stationary_distance;
    }
  } else {
    stat["degenerate"] = true;
  }
  report["stationary"] = std::move(stat);
  report["tolerances"] = {
      {"compare_max_distance", scenario.tolerances.compare_max_distance},
      {"stationary_distance", scenario.tolerances.stationary_distance}};
  report["passed"] = passed;
  return CompareOutcome{std::move(report), passed};
}

json cmd_noise_reduce(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error("noise-reduce: covariance matrix must be square");
  }
  const MinimalReduction red = minimal_reduction(a);

  // Roundtrip residual of the diagonalization.
  const ComplexMatrix rebuilt =
      red.unitary.adjoint() * red.gammas.asDiagonal() * red.unitary;
  const double roundtrip = (rebuilt - a).norm();
  if (roundtrip > 1e-10 * std::max(1.0, a.norm())) {
    throw InternalInconsistency("noise-reduce: diagonalization roundtrip failed");
  }

  json out;
  out["dim"] = a.rows();
  json gammas = json::array();
  for (Eigen::Index k = 0; k < red.gammas.size(); ++k) {
    gammas.push_back(red.gammas(k));
  }
  out["gammas"] = std::move(gammas);
  out["unitary"] = matrix_to_json(red.unitary);
  out["chosen_b"] = matrix_to_json(red.chosen_b);
  out["active_noise_count"] = red.active_noise_count();
  out["naive_real_noise_count"] = 2 * a.rows();
  out["roundtrip_error"] = roundtrip;
  out["picinbono_ok"] = check_picinbono(a, red.chosen_b);
  return out;
}

ComplexMatrix load_covariance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open covariance file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(std::string("covariance file: malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("matrix")) {
    return matrix_from_json(j["matrix"]);
  }
  if (j.is_array()) {
    return matrix_from_json(j);
  }
  throw Error("covariance file: expected a matrix or {\"matrix\": ...}");
}

}  // namespace qsse
