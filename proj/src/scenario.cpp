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

#include "qsse/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qsse {

namespace {

using nlohmann::json;

const char* kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Pauli: return "pauli";
    case OperatorKind::SigmaPlus: return "sigma_plus";
    case OperatorKind::SigmaMinus: return "sigma_minus";
    case OperatorKind::Annihilation: return "annihilation";
    case OperatorKind::Creation: return "creation";
    case OperatorKind::Number: return "number";
    case OperatorKind::CustomMatrix: return "custom-matrix";
  }
  throw Error("unknown operator kind");
}

OperatorKind kind_from_name(const std::string& name) {
  if (name == "pauli") return OperatorKind::Pauli;
  if (name == "sigma_plus") return OperatorKind::SigmaPlus;
  if (name == "sigma_minus") return OperatorKind::SigmaMinus;
  if (name == "annihilation") return OperatorKind::Annihilation;
  if (name == "creation") return OperatorKind::Creation;
  if (name == "number") return OperatorKind::Number;
  if (name == "custom-matrix") return OperatorKind::CustomMatrix;
  throw Error("unknown operator kind: " + name);
}

const char* scheme_name(SseScheme scheme) {
  switch (scheme) {
    case SseScheme::ItoEuler: return "ito_euler";
    case SseScheme::StratonovichHeun: return "stratonovich_heun";
    case SseScheme::ExactUnitary: return "exact_unitary";
  }
  throw Error("unknown scheme");
}

SseScheme scheme_from_name(const std::string& name) {
  if (name == "ito_euler") return SseScheme::ItoEuler;
  if (name == "stratonovich_heun") return SseScheme::StratonovichHeun;
  if (name == "exact_unitary") return SseScheme::ExactUnitary;
  throw Error("unknown scheme: " + name);
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error("scenario: complex values are [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const Operator& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Operator matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) {
    throw Error("scenario: empty custom matrix");
  }
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Operator m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw Error("scenario: ragged custom matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(j[r][c]);
    }
  }
  return m;
}

json opspec_to_json(const OperatorSpec& spec) {
  json j;
  j["kind"] = kind_name(spec.kind);
  if (spec.kind == OperatorKind::Pauli) {
    j["index"] = spec.index;
  }
  j["coefficient"] = complex_to_json(spec.coefficient);
  if (spec.kind == OperatorKind::CustomMatrix) {
    j["matrix"] = matrix_to_json(spec.custom);
  }
  return j;
}

OperatorSpec opspec_from_json(const json& j) {
  OperatorSpec spec;
  spec.kind = kind_from_name(j.at("kind").get<std::string>());
  spec.index = j.value("index", 3);
  spec.coefficient = complex_from_json(j.at("coefficient"));
  if (spec.kind == OperatorKind::CustomMatrix) {
    spec.custom = matrix_from_json(j.at("matrix"));
  }
  return spec;
}

void require_rates(double gamma, double gamma_prime, double n, double beta) {
  if (gamma < 0.0 || gamma_prime < 0.0) {
    throw Error("scenario: rates must be nonnegative");
  }
  if (n < 0.0) {
    throw Error("scenario: thermal occupation must be nonnegative");
  }
  if (beta <= 0.0) {
    throw Error("scenario: inverse temperature must be positive");
  }
}

}  // namespace

Operator OperatorSpec::realize(int dim) const {
  Operator base;
  switch (kind) {
    case OperatorKind::Pauli:
      if (dim != 2) throw Error("pauli operators need dim == 2");
      base = pauli(index);
      break;
    case OperatorKind::SigmaPlus:
      if (dim != 2) throw Error("sigma_plus needs dim == 2");
      base = sigma_plus();
      break;
    case OperatorKind::SigmaMinus:
      if (dim != 2) throw Error("sigma_minus needs dim == 2");
      base = sigma_minus();
      break;
    case OperatorKind::Annihilation:
      base = annihilation(dim);
      break;
    case OperatorKind::Creation:
      base = creation(dim);
      break;
    case OperatorKind::Number:
      base = number_op(dim);
      break;
    case OperatorKind::CustomMatrix:
      if (custom.rows() != dim || custom.cols() != dim) {
        throw DimensionMismatch("custom matrix does not match scenario dimension");
      }
      base = custom;
      break;
  }
  return coefficient * base;
}

StateVector InitialStateSpec::realize(int dim) const {
  if (kind == "basis") {
    return basis_state(dim, index);
  }
  if (kind == "amplitudes") {
    if (amplitudes.size() != dim) {
      throw DimensionMismatch("initial state amplitudes do not match dimension");
    }
    const double n = amplitudes.norm();
    if (n == 0.0) {
      throw Error("initial state has zero norm");
    }
    return amplitudes / n;
  }
  throw Error("unknown initial state kind: " + kind);
}

bool Scenario::oscillator() const {
  auto osc = [](const OperatorSpec& s) {
    return s.kind == OperatorKind::Annihilation || s.kind == OperatorKind::Creation ||
           s.kind == OperatorKind::Number;
  };
  for (const auto& s : hamiltonian) {
    if (osc(s)) return true;
  }
  for (const auto& s : lindblads) {
    if (osc(s)) return true;
  }
  return false;
}

Scenario build_scenario(const std::string& name) {
  Scenario sc;
  sc.name = name;
  sc.plan.seed = 20260808ULL;

  if (name == "phase_damping_qubit") {
    const double gamma = 1.0;
    const double omega = 0.0;
    require_rates(gamma, 0.0, 0.0, 1.0);
    sc.dim = 2;
    sc.hamiltonian = {{OperatorKind::Pauli, 1, Complex(omega, 0.0), {}}};
    sc.lindblads = {{OperatorKind::Pauli, 3, Complex(std::sqrt(gamma), 0.0), {}}};
    sc.initial_state.kind = "amplitudes";
    sc.initial_state.amplitudes = StateVector(2);
    sc.initial_state.amplitudes << Complex(M_SQRT1_2, 0.0), Complex(M_SQRT1_2, 0.0);
    sc.plan.dt = 1e-3;
    sc.plan.t_final = 2.0;
    sc.plan.record_stride = 1;
    sc.plan.n_traj = 10000;
    return sc;
  }

  if (name == "energy_damping_qubit") {
    const double gamma_prime = 1.0;
    require_rates(0.0, gamma_prime, 0.0, 1.0);
    sc.dim = 2;
    sc.hamiltonian = {};
    sc.lindblads = {{OperatorKind::SigmaMinus, 0, Complex(std::sqrt(gamma_prime), 0.0), {}}};
    sc.initial_state.kind = "basis";
    sc.initial_state.index = 0;  // excited
    sc.plan.dt = 1e-3;
    sc.plan.t_final = 5.0;
    sc.plan.record_stride = 5;
    sc.plan.n_traj = 10000;
    return sc;
  }

  if (name == "thermal_qubit") {
    const double omega = 1.0;
    const double beta = std::log(2.0);  // beta * omega = ln 2 -> n = 1
    const double gamma_prime = 1.0;
    const double gamma = 0.2;
    const double n = 1.0 / std::expm1(beta * omega);
    require_rates(gamma, gamma_prime, n, beta);
    sc.dim = 2;
    sc.hamiltonian = {{OperatorKind::Pauli, 3, Complex(0.5 * omega, 0.0), {}}};
    sc.lindblads = {
        {OperatorKind::SigmaMinus, 0, Complex(std::sqrt(gamma_prime * (1.0 + n)), 0.0), {}},
        {OperatorKind::SigmaPlus, 0, Complex(std::sqrt(gamma_prime * n), 0.0), {}},
        {OperatorKind::Pauli, 3, Complex(std::sqrt(gamma), 0.0), {}},
    };
    sc.initial_state.kind = "amplitudes";
    sc.initial_state.amplitudes = StateVector(2);
    sc.initial_state.amplitudes << Complex(M_SQRT1_2, 0.0), Complex(M_SQRT1_2, 0.0);
    sc.plan.dt = 1e-3;
    sc.plan.t_final = 4.0;
    sc.plan.record_stride = 5;
    sc.plan.n_traj = 10000;
    // Per-trajectory norm fluctuations of the decay channels push the MC
    // noise floor above the qubit default at these settings.
    sc.tolerances.compare_max_distance = 0.12;
    return sc;
  }

  if (name == "osc_phase_damping") {
    const double gamma = 1.0;
    sc.dim = sc.d_max = 12;
    sc.hamiltonian = {};
    sc.lindblads = {{OperatorKind::Number, 0, Complex(std::sqrt(gamma), 0.0), {}}};
    sc.initial_state.kind = "amplitudes";
    sc.initial_state.amplitudes = StateVector::Zero(12);
    sc.initial_state.amplitudes(0) = M_SQRT1_2;
    sc.initial_state.amplitudes(1) = M_SQRT1_2;
    sc.plan.dt = 1e-3;
    sc.plan.t_final = 3.0;
    sc.plan.record_stride = 10;
    sc.plan.n_traj = 1000;
    sc.tolerances.compare_max_distance = 0.12;
    return sc;
  }

  if (name == "osc_energy_damping") {
    const double gamma_prime = 1.0;
    sc.dim = sc.d_max = 12;
    sc.hamiltonian = {};
    sc.lindblads = {{OperatorKind::Annihilation, 0, Complex(std::sqrt(gamma_prime), 0.0), {}}};
    sc.initial_state.kind = "basis";
    sc.initial_state.index = 2;
    sc.plan.dt = 1e-3;
    sc.plan.t_final = 3.0;
    sc.plan.record_stride = 10;
    sc.plan.n_traj = 1000;
    sc.tolerances.compare_max_distance = 0.12;
    return sc;
  }

  if (name == "osc_thermal") {
    const double gamma_prime = 1.0;
    const double gamma = 0.1;
    const double n = 0.3;
    require_rates(gamma, gamma_prime, n, 1.0);
    sc.dim = sc.d_max = 12;
    sc.hamiltonian = {};
    sc.lindblads = {
        {OperatorKind::Annihilation, 0, Complex(std::sqrt(gamma_prime * (1.0 + n)), 0.0), {}},
        {OperatorKind::Creation, 0, Complex(std::sqrt(gamma_prime * n), 0.0), {}},
        {OperatorKind::Number, 0, Complex(std::sqrt(gamma), 0.0), {}},
    };
    sc.initial_state.kind = "basis";
    sc.initial_state.index = 2;
    sc.plan.dt = 1e-3;
    // The unnormalized unraveling loses statistical efficiency quickly for
    // multi-channel oscillators, so the stored horizon is short.
    sc.plan.t_final = 1.5;
    sc.plan.record_stride = 10;
    sc.plan.n_traj = 2000;
    sc.tolerances.compare_max_distance = 0.15;
    return sc;
  }

  throw Error("unknown builtin scenario: " + name);
}

std::vector<std::string> builtin_scenario_names() {
  return {"phase_damping_qubit", "energy_damping_qubit", "thermal_qubit",
          "osc_phase_damping",   "osc_energy_damping",   "osc_thermal"};
}

std::string scenario_to_json(const Scenario& sc) {
  json j;
  j["name"] = sc.name;
  j["dim"] = sc.dim;
  j["hamiltonian"] = json::array();
  for (const auto& h : sc.hamiltonian) {
    j["hamiltonian"].push_back(opspec_to_json(h));
  }
  j["lindblads"] = json::array();
  for (const auto& l : sc.lindblads) {
    j["lindblads"].push_back(opspec_to_json(l));
  }
  j["d_max"] = sc.d_max;
  json init;
  init["kind"] = sc.initial_state.kind;
  if (sc.initial_state.kind == "basis") {
    init["index"] = sc.initial_state.index;
  } else {
    json amps = json::array();
    for (Eigen::Index i = 0; i < sc.initial_state.amplitudes.size(); ++i) {
      amps.push_back(complex_to_json(sc.initial_state.amplitudes(i)));
    }
    init["amplitudes"] = std::move(amps);
  }
  j["initial_state"] = std::move(init);
  j["plan"] = {{"scheme", scheme_name(sc.plan.scheme)},
               {"dt", sc.plan.dt},
               {"t_final", sc.plan.t_final},
               {"record_stride", sc.plan.record_stride},
               {"n_traj", sc.plan.n_traj},
               {"seed", sc.plan.seed}};
  j["tolerances"] = {{"compare_max_distance", sc.tolerances.compare_max_distance},
                     {"stationary_distance", sc.tolerances.stationary_distance}};
  return j.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("scenario: malformed JSON: ") + e.what());
  }
  Scenario sc;
  try {
    sc.name = j.at("name").get<std::string>();
    sc.dim = j.at("dim").get<int>();
    if (sc.dim < 2) {
      throw Error("scenario: dim must be >= 2");
    }
    for (const auto& h : j.at("hamiltonian")) {
      sc.hamiltonian.push_back(opspec_from_json(h));
    }
    for (const auto& l : j.at("lindblads")) {
      sc.lindblads.push_back(opspec_from_json(l));
    }
    sc.d_max = j.value("d_max", 0);
    const json& init = j.at("initial_state");
    sc.initial_state.kind = init.at("kind").get<std::string>();
    if (sc.initial_state.kind == "basis") {
      sc.initial_state.index = init.at("index").get<int>();
    } else if (sc.initial_state.kind == "amplitudes") {
      const json& amps = init.at("amplitudes");
      sc.initial_state.amplitudes.resize(static_cast<Eigen::Index>(amps.size()));
      for (std::size_t i = 0; i < amps.size(); ++i) {
        sc.initial_state.amplitudes(static_cast<Eigen::Index>(i)) =
            complex_from_json(amps[i]);
      }
    } else {
      throw Error("scenario: unknown initial state kind");
    }
    const json& plan = j.at("plan");
    sc.plan.scheme = scheme_from_name(plan.at("scheme").get<std::string>());
    sc.plan.dt = plan.at("dt").get<double>();
    sc.plan.t_final = plan.at("t_final").get<double>();
    sc.plan.record_stride = plan.at("record_stride").get<int>();
    sc.plan.n_traj = plan.at("n_traj").get<int>();
    sc.plan.seed = plan.at("seed").get<std::uint64_t>();
    if (j.contains("tolerances")) {
      const json& tol = j["tolerances"];
      sc.tolerances.compare_max_distance =
          tol.value("compare_max_distance", sc.tolerances.compare_max_distance);
      sc.tolerances.stationary_distance =
          tol.value("stationary_distance", sc.tolerances.stationary_distance);
    }
  } catch (const json::exception& e) {
    throw Error(std::string("scenario: malformed document: ") + e.what());
  }
  if (sc.oscillator() && sc.d_max < 2) {
    throw Error("scenario: oscillator scenarios need d_max >= 2");
  }
  if (sc.d_max > 0 && sc.d_max != sc.dim) {
    throw Error("scenario: d_max must equal dim for truncated oscillators");
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open scenario file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str());
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write scenario file: " + path);
  }
  out << scenario_to_json(scenario) << "\n";
}

GklsGenerator make_generator(const Scenario& sc) {
  Operator h = Operator::Zero(sc.dim, sc.dim);
  for (const auto& spec : sc.hamiltonian) {
    h += spec.realize(sc.dim);
  }
  std::vector<Operator> ls;
  ls.reserve(sc.lindblads.size());
  for (const auto& spec : sc.lindblads) {
    ls.push_back(spec.realize(sc.dim));
  }
  return GklsGenerator(std::move(h), std::move(ls));
}

StateVector make_initial_state(const Scenario& sc) {
  return sc.initial_state.realize(sc.dim);
}

SsePlan make_plan(const Scenario& sc) {
  SsePlan plan{make_generator(sc), sc.plan.scheme, sc.plan.dt, sc.plan.t_final,
               sc.plan.record_stride, sc.plan.seed};
  plan.validate();
  return plan;
}

}  // namespace qsse
