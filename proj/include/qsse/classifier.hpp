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

#include <optional>
#include <vector>

#include "qsse/generator.hpp"
#include "qsse/types.hpp"

namespace qsse {

enum class ChannelKind { Dephasing, Decay };

// Verdict for one channel. A dephasing channel carries a stable basis: an
// orthonormal basis whose projectors the channel annihilates. The basis is
// not unique when eigenvalues are degenerate; one valid choice is returned.
struct ChannelVerdict {
  ChannelKind kind = ChannelKind::Decay;
  std::optional<std::vector<StateVector>> stable_basis;
  std::optional<double> self_dual_phase;  // alpha in (-pi, pi], if any
};

// Result of the L^dag = e^{i alpha} L fit. `degenerate` marks the zero
// operator, where every phase fits and none is reported.
struct SelfDualPhase {
  std::optional<double> alpha;
  bool degenerate = false;
};

// Largest-entry phase fit followed by a global verification pass.
SelfDualPhase self_dual_phase(const Operator& l, double tol = kTolSuperop);

// Dephasing iff L is normal; the stable basis is the Schur basis, checked
// post hoc against the channel itself.
ChannelVerdict classify_single(const Operator& l, double tol = kTolSuperop);

// Hermitian channel list rebuilding the dissipator of a self-dual generator:
// the Hermitian/anti-Hermitian parts of each L_k, proportional members merged
// in quadrature, zero members dropped. Throws NotSelfDual when the
// precondition fails.
std::vector<Operator> decompose_self_dual(const GklsGenerator& g,
                                          double tol = kTolSuperop);

struct ClassificationReport {
  bool generator_self_dual = false;
  std::vector<ChannelVerdict> per_channel;
  std::optional<std::vector<Operator>> hermitian_decomposition;
  bool classical_noise_dilation = false;
  // Pairwise commutation of the channel operators; a joint stable basis is
  // never claimed, this flag is the closest certificate.
  bool channels_commute = false;
};

ClassificationReport classify_generator(const GklsGenerator& g,
                                        double tol = kTolSuperop);

}  // namespace qsse
