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

#include <json.hpp>

#include "qsse/scenario.hpp"
#include "qsse/types.hpp"

namespace qsse {

// A verdict that contradicts itself (e.g. self-dual without a Hermitian
// decomposition); callers map this to a distinct exit status.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// Classification fragment of a run report.
nlohmann::json cmd_classify(const Scenario& scenario, double tol = kTolSuperop);

// Ensemble run plus CSV emission. Returns the report fragment; leakage above
// one percent is recorded as a warning, never a failure.
nlohmann::json cmd_simulate(const Scenario& scenario, const std::string& out_dir,
                            bool traj_dump = false);

struct CompareOutcome {
  nlohmann::json report;
  bool passed = false;
};

// Ensemble vs exact evolution on the same grid, checked against the
// scenario's stored tolerances.
CompareOutcome cmd_compare(const Scenario& scenario);

// Covariance diagnostics: spectrum, reducing unitary, chosen relation matrix,
// active real-noise count, roundtrip residual.
nlohmann::json cmd_noise_reduce(const ComplexMatrix& covariance);

// Covariance input file: {"matrix": [[[re, im], ...], ...]} or the bare array.
ComplexMatrix load_covariance(const std::string& path);

}  // namespace qsse
