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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsse/classifier.hpp"
#include "qsse/commands.hpp"
#include "qsse/kossakowski.hpp"
#include "qsse/scenario.hpp"
#include "qsse/trajectory.hpp"

namespace py = pybind11;
using namespace qsse;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stochastic unravelings of GKLS master equations: generators, "
            "trajectory ensembles, channel classification, correlated noise.";

  py::register_exception<Error>(m, "QsseError");

  // ----- operators ---------------------------------------------------------
  m.def("pauli", &pauli, py::arg("alpha"));
  m.def("sigma_plus", &sigma_plus);
  m.def("sigma_minus", &sigma_minus);
  m.def("projector_up", &projector_up);
  m.def("projector_down", &projector_down);
  m.def("annihilation", &annihilation, py::arg("dim"));
  m.def("creation", &creation, py::arg("dim"));
  m.def("number_op", &number_op, py::arg("dim"));
  m.def("basis_state", &basis_state, py::arg("dim"), py::arg("index"));
  m.def("hermitian_basis", &hermitian_basis, py::arg("dim"));
  m.def("dagger", &dagger);
  m.def("commutator", &commutator);
  m.def("anticommutator", &anticommutator);
  m.def("is_hermitian", &is_hermitian, py::arg("a"), py::arg("tol") = kTolHerm);
  m.def("is_normal", &is_normal, py::arg("a"), py::arg("tol") = kTolNorm);
  m.def("expm", &expm, py::arg("m"), py::arg("t") = 1.0);
  m.def("null_space", &null_space, py::arg("m"), py::arg("tol") = kNullSpaceThreshold);
  m.def("trace_distance", &trace_distance);
  m.def("expand_in_basis", &expand_in_basis, py::arg("ops"), py::arg("basis"),
        py::arg("tol") = 1e-9);

  // ----- generator ---------------------------------------------------------
  py::class_<GklsGenerator>(m, "GklsGenerator")
      .def(py::init<Operator, std::vector<Operator>, double>(),
           py::arg("hamiltonian"), py::arg("lindblads"), py::arg("tol") = kTolHerm)
      .def_readonly("hamiltonian", &GklsGenerator::hamiltonian)
      .def_readonly("lindblads", &GklsGenerator::lindblads)
      .def_property_readonly("dim", &GklsGenerator::dim)
      .def("overcomplete", &GklsGenerator::overcomplete);

  py::class_<StratonovichForm>(m, "StratonovichForm")
      .def_readonly("h1s", &StratonovichForm::h1s)
      .def_readonly("h2s", &StratonovichForm::h2s)
      .def_readonly("lindblads", &StratonovichForm::lindblads);

  m.def("apply_generator", &apply, py::arg("generator"), py::arg("rho"),
        py::arg("include_hamiltonian") = true);
  m.def("apply_dual", &apply_dual, py::arg("generator"), py::arg("a"),
        py::arg("include_hamiltonian") = false);
  m.def("h2_ito", &h2_ito);
  m.def("to_stratonovich", &to_stratonovich);
  m.def("dissipator_matrix", &dissipator_matrix);
  m.def("liouvillian_matrix", &liouvillian_matrix);
  m.def("is_self_dual", &is_self_dual, py::arg("generator"),
        py::arg("tol") = kTolSuperop);
  m.def("is_trace_preserving", py::overload_cast<const GklsGenerator&, double>(
            &is_trace_preserving),
        py::arg("generator"), py::arg("tol") = 1e-12);
  m.def("evolve_exact", &evolve_exact, py::arg("generator"), py::arg("rho0"),
        py::arg("times"));
  m.def("stationary_states", &stationary_states, py::arg("generator"),
        py::arg("tol") = kNullSpaceThreshold);

  py::class_<KossakowskiForm>(m, "KossakowskiForm")
      .def(py::init<std::vector<Operator>, ComplexMatrix, double>(),
           py::arg("basis"), py::arg("coefficients"), py::arg("tol") = kTolHerm)
      .def_readonly("basis", &KossakowskiForm::basis)
      .def_readonly("coefficients", &KossakowskiForm::coefficients)
      .def("apply", &KossakowskiForm::apply)
      .def("matrix", &KossakowskiForm::matrix);
  m.def("kossakowski_from_lindblads", &kossakowski_from_lindblads,
        py::arg("lindblads"), py::arg("basis"));

  // ----- classifier --------------------------------------------------------
  py::enum_<ChannelKind>(m, "ChannelKind")
      .value("Dephasing", ChannelKind::Dephasing)
      .value("Decay", ChannelKind::Decay);

  py::class_<ChannelVerdict>(m, "ChannelVerdict")
      .def_readonly("kind", &ChannelVerdict::kind)
      .def_readonly("stable_basis", &ChannelVerdict::stable_basis)
      .def_readonly("self_dual_phase", &ChannelVerdict::self_dual_phase);

  py::class_<SelfDualPhase>(m, "SelfDualPhase")
      .def_readonly("alpha", &SelfDualPhase::alpha)
      .def_readonly("degenerate", &SelfDualPhase::degenerate);

  py::class_<ClassificationReport>(m, "ClassificationReport")
      .def_readonly("generator_self_dual", &ClassificationReport::generator_self_dual)
      .def_readonly("per_channel", &ClassificationReport::per_channel)
      .def_readonly("hermitian_decomposition",
                    &ClassificationReport::hermitian_decomposition)
      .def_readonly("classical_noise_dilation",
                    &ClassificationReport::classical_noise_dilation)
      .def_readonly("channels_commute", &ClassificationReport::channels_commute);

  m.def("self_dual_phase", &self_dual_phase, py::arg("l"), py::arg("tol") = kTolSuperop);
  m.def("classify_single", &classify_single, py::arg("l"), py::arg("tol") = kTolSuperop);
  m.def("decompose_self_dual", &decompose_self_dual, py::arg("generator"),
        py::arg("tol") = kTolSuperop);
  m.def("classify_generator", &classify_generator, py::arg("generator"),
        py::arg("tol") = kTolSuperop);

  // ----- noise -------------------------------------------------------------
  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_static("child", &RngStream::child, py::arg("seed"), py::arg("index"))
      .def("next_u64", &RngStream::next_u64)
      .def("next_uniform", &RngStream::next_uniform)
      .def("next_normal", &RngStream::next_normal);
  m.def("child_seed", &child_seed, py::arg("seed"), py::arg("index"));

  py::class_<WienerBatch>(m, "WienerBatch")
      .def(py::init<>())
      .def_readwrite("dt", &WienerBatch::dt)
      .def_readwrite("increments", &WienerBatch::increments)
      .def_property_readonly("channels", &WienerBatch::channels);
  m.def("sample_wiener", &sample_wiener, py::arg("n_channels"), py::arg("dt"),
        py::arg("rng"));

  py::class_<ComplexNoiseModel>(m, "ComplexNoiseModel")
      .def_readonly("coeffs", &ComplexNoiseModel::coeffs)
      .def_readonly("covariance", &ComplexNoiseModel::covariance)
      .def_readonly("relation", &ComplexNoiseModel::relation);
  m.def("model_from_coeffs", &model_from_coeffs, py::arg("c"));
  m.def("check_picinbono", &check_picinbono, py::arg("a"), py::arg("b"),
        py::arg("tol") = kTolPsd);

  py::class_<MinimalReduction>(m, "MinimalReduction")
      .def_readonly("unitary", &MinimalReduction::unitary)
      .def_readonly("gammas", &MinimalReduction::gammas)
      .def_readonly("chosen_b", &MinimalReduction::chosen_b)
      .def("coefficients", &MinimalReduction::coefficients)
      .def("active_noise_count", &MinimalReduction::active_noise_count,
           py::arg("tol") = kTolPsd);
  m.def("minimal_reduction", &minimal_reduction, py::arg("a"),
        py::arg("tol") = kTolPsd);
  m.def("sample_complex", &sample_complex, py::arg("model"), py::arg("dt"),
        py::arg("rng"));

  // ----- trajectories ------------------------------------------------------
  py::enum_<SseScheme>(m, "SseScheme")
      .value("ItoEuler", SseScheme::ItoEuler)
      .value("StratonovichHeun", SseScheme::StratonovichHeun)
      .value("ExactUnitary", SseScheme::ExactUnitary);

  py::class_<SsePlan>(m, "SsePlan")
      .def(py::init<GklsGenerator, SseScheme, double, double, int, std::uint64_t>(),
           py::arg("generator"), py::arg("scheme") = SseScheme::ItoEuler,
           py::arg("dt") = 1e-3, py::arg("t_final") = 1.0,
           py::arg("record_stride") = 1, py::arg("seed") = 0)
      .def_readwrite("scheme", &SsePlan::scheme)
      .def_readwrite("dt", &SsePlan::dt)
      .def_readwrite("t_final", &SsePlan::t_final)
      .def_readwrite("record_stride", &SsePlan::record_stride)
      .def_readwrite("seed", &SsePlan::seed)
      .def("validate", &SsePlan::validate);

  py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
      .def_readonly("times", &TrajectoryRecord::times)
      .def_readonly("states", &TrajectoryRecord::states)
      .def_readonly("norms_sq", &TrajectoryRecord::norms_sq)
      .def_readonly("seed_used", &TrajectoryRecord::seed_used);

  py::class_<EnsembleResult>(m, "EnsembleResult")
      .def_readonly("n_traj", &EnsembleResult::n_traj)
      .def_readonly("times", &EnsembleResult::times)
      .def_readonly("rho_series", &EnsembleResult::rho_series)
      .def_readonly("mean_norm_sq", &EnsembleResult::mean_norm_sq);

  m.def("ito_step", &ito_step, py::arg("psi"), py::arg("generator"), py::arg("dw"),
        py::arg("dt"));
  m.def("stratonovich_step", &stratonovich_step, py::arg("psi"), py::arg("form"),
        py::arg("dw"), py::arg("dt"));
  m.def("exact_unitary_step", &exact_unitary_step, py::arg("psi"), py::arg("h1"),
        py::arg("lindblads"), py::arg("dw"), py::arg("dt"),
        py::arg("tol") = kTolHerm);
  m.def("run_trajectory", &run_trajectory, py::arg("plan"), py::arg("psi0"),
        py::arg("traj_index"));
  m.def("run_ensemble", &run_ensemble, py::arg("plan"), py::arg("psi0"),
        py::arg("n_traj"), py::arg("n_threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("compare_to_exact", &compare_to_exact, py::arg("ensemble"),
        py::arg("generator"), py::arg("rho0"));

  // ----- scenarios ---------------------------------------------------------
  py::class_<PlanParams>(m, "PlanParams")
      .def_readwrite("scheme", &PlanParams::scheme)
      .def_readwrite("dt", &PlanParams::dt)
      .def_readwrite("t_final", &PlanParams::t_final)
      .def_readwrite("record_stride", &PlanParams::record_stride)
      .def_readwrite("n_traj", &PlanParams::n_traj)
      .def_readwrite("seed", &PlanParams::seed);

  py::class_<Scenario>(m, "Scenario")
      .def_readwrite("name", &Scenario::name)
      .def_readonly("dim", &Scenario::dim)
      .def_readonly("d_max", &Scenario::d_max)
      .def_readwrite("plan", &Scenario::plan)
      .def("oscillator", &Scenario::oscillator);

  m.def("build_scenario", &build_scenario, py::arg("name"));
  m.def("builtin_scenario_names", &builtin_scenario_names);
  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("save_scenario", &save_scenario, py::arg("scenario"), py::arg("path"));
  m.def("scenario_to_json", &scenario_to_json, py::arg("scenario"));
  m.def("make_generator", &make_generator, py::arg("scenario"));
  m.def("make_initial_state", &make_initial_state, py::arg("scenario"));
  m.def("make_plan", &make_plan, py::arg("scenario"));
  m.def("classify_report_json",
        [](const Scenario& sc, double tol) { return cmd_classify(sc, tol).dump(2); },
        py::arg("scenario"), py::arg("tol") = kTolSuperop);
  m.def("compare_report_json",
        [](const Scenario& sc) {
          const CompareOutcome outcome = cmd_compare(sc);
          return py::make_tuple(outcome.passed, outcome.report.dump(2));
        },
        py::arg("scenario"), py::call_guard<py::gil_scoped_release>());
}
