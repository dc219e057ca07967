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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qsse {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;       // dense d x d
using DensityMatrix = Eigen::MatrixXcd;  // dense d x d, Hermitian trace-one when physical
using SuperOpMatrix = Eigen::MatrixXcd;  // d^2 x d^2, acts on column-stacked matrices
using StateVector = Eigen::VectorXcd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Default tolerances; every predicate takes an explicit override.
inline constexpr double kTolHerm = 1e-10;
inline constexpr double kTolNorm = 1e-10;
inline constexpr double kTolPsd = 1e-9;
inline constexpr double kTolSuperop = 1e-9;  // relative Frobenius, superoperator equality
inline constexpr double kNullSpaceThreshold = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSelfDual : public Error {
 public:
  using Error::Error;
};

class NonHermitianLindblad : public Error {
 public:
  using Error::Error;
};

}  // namespace qsse
