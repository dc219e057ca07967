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

#include "qsse/rng.hpp"
#include "qsse/types.hpp"

namespace qsse {

// One batch of independent real Wiener increments: mean zero, variance dt.
struct WienerBatch {
  double dt = 0.0;
  RealVector increments;

  int channels() const { return static_cast<int>(increments.size()); }
};

WienerBatch sample_wiener(int n_channels, double dt, RngStream& rng);

// Correlated complex increments dZ_j = sum_k c_kj dW_k. The covariance
// a_ij = <dZ_i^* dZ_j>/dt and relation b_ij = <dZ_i dZ_j>/dt follow from c:
// a = c^dag c (Hermitian PSD), b = c^T c (symmetric). The relation matrix is
// stored because it feeds the Stratonovich drift even though the averaged
// master equation only sees a.
struct ComplexNoiseModel {
  ComplexMatrix coeffs;      // N x m
  ComplexMatrix covariance;  // a, m x m
  ComplexMatrix relation;    // b, m x m
};

ComplexNoiseModel model_from_coeffs(const ComplexMatrix& c);

// Admissibility of a complex Gaussian pair (a, b):
//   a Hermitian PSD, b symmetric, range(b) within range(a),
//   conj(a) - b a^+ b^dag PSD (pseudo-inverse a^+ on the support of a).
bool check_picinbono(const ComplexMatrix& a, const ComplexMatrix& b,
                     double tol = kTolPsd);

// Diagonalization a_ij = sum_k gamma_k conj(U_ki) U_kj with descending
// gamma, plus the relation matrix b_ij = sum_k gamma_k U_ki U_kj that makes
// the imaginary parts of the rotated increments vanish: rank(a) real noises
// carry the full model.
struct MinimalReduction {
  ComplexMatrix unitary;  // U, rows indexed by the real-noise channel
  RealVector gammas;      // descending, >= 0
  ComplexMatrix chosen_b;

  // c_kj = sqrt(gamma_k) U_kj; feeding this back into model_from_coeffs
  // reproduces (a, chosen_b).
  ComplexMatrix coefficients() const;

  int active_noise_count(double tol = kTolPsd) const;
};

MinimalReduction minimal_reduction(const ComplexMatrix& a, double tol = kTolPsd);

// One draw of the complex increment vector, consuming N real increments.
ComplexVector sample_complex(const ComplexNoiseModel& model, double dt,
                             RngStream& rng);

}  // namespace qsse
