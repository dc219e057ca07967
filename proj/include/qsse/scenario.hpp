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

#pragma once

#include <string>
#include <vector>

#include "qsse/generator.hpp"
#include "qsse/trajectory.hpp"
#include "qsse/types.hpp"

namespace qsse {

enum class OperatorKind {
  Pauli,         // needs index 1..3 (0 = identity)
  SigmaPlus,
  SigmaMinus,
  Annihilation,
  Creation,
  Number,
  CustomMatrix,
};

struct OperatorSpec {
  OperatorKind kind = OperatorKind::Pauli;
  int index = 3;                  // Pauli only
  Complex coefficient{1.0, 0.0};  // multiplies the operator (sqrt-rate units)
  Operator custom;                // CustomMatrix only

  Operator realize(int dim) const;
};

struct InitialStateSpec {
  // "basis" picks |index>; "amplitudes" carries an explicit vector,
  // normalized on realization.
  std::string kind = "basis";
  int index = 0;
  StateVector amplitudes;

  StateVector realize(int dim) const;
};

struct PlanParams {
  SseScheme scheme = SseScheme::ItoEuler;
  double dt = 1e-3;
  double t_final = 2.0;
  int record_stride = 1;
  int n_traj = 10000;
  std::uint64_t seed = 0;
};

struct ScenarioTolerances {
  double compare_max_distance = 0.05;
  double stationary_distance = 0.05;
};

// A fully parameterized model: operators are stored resolved (coefficient
// times kind), so files round-trip without re-deriving rates.
struct Scenario {
  std::string name;
  int dim = 2;
  std::vector<OperatorSpec> hamiltonian;  // summed
  std::vector<OperatorSpec> lindblads;
  int d_max = 0;  // Fock truncation, oscillator kinds only (== dim there)
  InitialStateSpec initial_state;
  PlanParams plan;
  ScenarioTolerances tolerances;

  bool oscillator() const;
};

// Builtin zoo: phase_damping_qubit, energy_damping_qubit, thermal_qubit,
// osc_phase_damping, osc_energy_damping, osc_thermal.
Scenario build_scenario(const std::string& name);
std::vector<std::string> builtin_scenario_names();

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

GklsGenerator make_generator(const Scenario& scenario);
StateVector make_initial_state(const Scenario& scenario);
SsePlan make_plan(const Scenario& scenario);

}  // namespace qsse
