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

#include <cstdint>
#include <vector>

#include "qsse/generator.hpp"
#include "qsse/noise.hpp"
#include "qsse/types.hpp"

namespace qsse {

enum class SseScheme { ItoEuler, StratonovichHeun, ExactUnitary };

// Integration plan for a stochastic state-vector unraveling. States are never
// renormalized along a trajectory; the mean of |psi><psi| over trajectories
// is what solves the master equation, norm fluctuations included.
struct SsePlan {
  GklsGenerator generator;
  SseScheme scheme = SseScheme::ItoEuler;
  double dt = 1e-3;
  double t_final = 1.0;
  int record_stride = 1;
  std::uint64_t seed = 0;

  void validate() const;  // throws; ExactUnitary demands Hermitian channels
  int n_steps() const;
};

// One Euler step of the Ito equation
//   d psi = (-i H1 - H2) psi dt - i sum_k L_k psi dW_k,  H2 = h2_ito(G).
StateVector ito_step(const StateVector& psi, const GklsGenerator& g,
                     const WienerBatch& dw, double dt);

// Heun predictor-corrector step of the Stratonovich equation with drift
// -i H1S - H2S and the same diffusion operators.
StateVector stratonovich_step(const StateVector& psi, const StratonovichForm& s,
                              const WienerBatch& dw, double dt);

// psi' = exp(-i (H1 dt + sum_k L_k dW_k)) psi. Requires Hermitian L_k; the
// step is then exactly unitary and single-realization norms are conserved.
StateVector exact_unitary_step(const StateVector& psi, const Operator& h1,
                               const std::vector<Operator>& lindblads,
                               const WienerBatch& dw, double dt,
                               double tol = kTolHerm);

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<StateVector> states;  // un-normalized
  std::vector<double> norms_sq;
  std::uint64_t seed_used = 0;
};

// Integrate one trajectory, drawing from the child stream of plan.seed at
// traj_index and recording every record_stride steps (final step always
// recorded).
TrajectoryRecord run_trajectory(const SsePlan& plan, const StateVector& psi0,
                                std::uint64_t traj_index);

struct EnsembleResult {
  int n_traj = 0;
  std::vector<double> times;
  std::vector<DensityMatrix> rho_series;  // mean of |psi><psi|, no renormalization
  std::vector<double> mean_norm_sq;
};

// M independent trajectories on child streams 0..M-1. Accumulation follows a
// fixed pairwise reduction tree over the trajectory index, so the result is
// bit-stable for any thread count. n_threads = 0 picks the hardware count.
EnsembleResult run_ensemble(const SsePlan& plan, const StateVector& psi0,
                            int n_traj, int n_threads = 0);

// Per-time trace distance between the ensemble mean and the exact evolution
// of rho0 on the same grid.
std::vector<double> compare_to_exact(const EnsembleResult& ensemble,
                                     const GklsGenerator& g,
                                     const DensityMatrix& rho0);

}  // namespace qsse
