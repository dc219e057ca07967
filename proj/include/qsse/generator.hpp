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

#include <vector>

#include "qsse/linalg.hpp"
#include "qsse/types.hpp"

namespace qsse {

// A GKLS generator: Hermitian Hamiltonian plus an ordered list of Lindblad
// operators. The dissipator acts as
//   D(rho) = -1/2 sum_k ( {L_k^dag L_k, rho} - 2 L_k rho L_k^dag ).
struct GklsGenerator {
  Operator hamiltonian;
  std::vector<Operator> lindblads;

  GklsGenerator(Operator h, std::vector<Operator> ls, double tol = kTolHerm);

  int dim() const { return static_cast<int>(hamiltonian.rows()); }

  // More than d^2 - 1 channels is redundant but legal; flagged, not rejected.
  bool overcomplete() const {
    const std::size_t d = static_cast<std::size_t>(dim());
    return lindblads.size() > d * d - 1;
  }
};

// Drift Hamiltonians of the Stratonovich form of the state-vector SDE
// attached to a generator. h2s vanishes exactly when every Lindblad operator
// is Hermitian.
struct StratonovichForm {
  Operator h1s;
  Operator h2s;
  std::vector<Operator> lindblads;
};

// d rho / dt. Hamiltonian part -i[H, rho] included unless disabled.
DensityMatrix apply(const GklsGenerator& g, const DensityMatrix& rho,
                    bool include_hamiltonian = true);

// Heisenberg-picture dual of the dissipator,
//   D#(A) = -1/2 sum_k ( {L_k^dag L_k, A} - 2 L_k^dag A L_k ),
// with optional +i[H, A].
Operator apply_dual(const GklsGenerator& g, const Operator& a,
                    bool include_hamiltonian = false);

// 1/2 sum_k L_k^dag L_k, the non-Hermitian drift required for mean norm
// conservation in the Ito unraveling.
Operator h2_ito(const GklsGenerator& g);

StratonovichForm to_stratonovich(const GklsGenerator& g);

// Superoperator matrices (column-stacking convention throughout).
SuperOpMatrix dissipator_matrix(const GklsGenerator& g);
SuperOpMatrix dual_dissipator_matrix(const GklsGenerator& g);
SuperOpMatrix liouvillian_matrix(const GklsGenerator& g);  // Hamiltonian + dissipator

// Frobenius comparison of the dissipator against its dual, relative tolerance.
// The Hamiltonian part is excluded by definition.
bool is_self_dual(const GklsGenerator& g, double tol = kTolSuperop);

// D#(1) = 0 within tol. Structurally guaranteed for any well-formed generator;
// the SuperOpMatrix overload in linalg covers hand-built maps.
bool is_trace_preserving(const GklsGenerator& g, double tol = 1e-12);

// rho(t) = unvec( exp(t L_tot) vec(rho0) ) for each requested time.
std::vector<DensityMatrix> evolve_exact(const GklsGenerator& g,
                                        const DensityMatrix& rho0,
                                        const std::vector<double>& times);

// Physical stationary states: kernel of L_tot, Hermitized, traceless
// directions dropped, trace normalized to one. Degenerate kernels return a
// basis of states; callers pick extreme points. Throws if no trace-carrying
// kernel element exists (cannot happen for a well-formed generator).
std::vector<DensityMatrix> stationary_states(const GklsGenerator& g,
                                             double tol = kNullSpaceThreshold);

}  // namespace qsse
