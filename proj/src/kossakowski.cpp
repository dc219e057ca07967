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

#include "qsse/kossakowski.hpp"

namespace qsse {

KossakowskiForm::KossakowskiForm(std::vector<Operator> basis_in, ComplexMatrix a,
                                 double tol)
    : basis(std::move(basis_in)), coefficients(std::move(a)) {
  if (basis.empty()) {
    throw Error("KossakowskiForm: empty basis");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  if (coefficients.rows() != m || coefficients.cols() != m) {
    throw DimensionMismatch("KossakowskiForm: coefficient matrix shape mismatch");
  }
  for (const auto& l : basis) {
    if (l.rows() != basis.front().rows() || l.cols() != basis.front().cols()) {
      throw DimensionMismatch("KossakowskiForm: basis dimension mismatch");
    }
    if (!is_hermitian(l, tol)) {
      throw Error("KossakowskiForm: basis operator is not Hermitian");
    }
  }
  if (!is_hermitian(coefficients, tol)) {
    throw Error("KossakowskiForm: coefficient matrix is not Hermitian");
  }
}

DensityMatrix KossakowskiForm::apply(const DensityMatrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) {
    throw DimensionMismatch("KossakowskiForm::apply: dimension mismatch");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  DensityMatrix out = DensityMatrix::Zero(dim(), dim());
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const Complex a = coefficients(i, j);
      if (a == Complex{0.0, 0.0}) {
        continue;
      }
      out -= 0.5 * a *
             (anticommutator(basis[i] * basis[j], rho) - 2.0 * (basis[j] * rho * basis[i]));
    }
  }
  return out;
}

SuperOpMatrix KossakowskiForm::matrix() const {
  return superop_of_map([this](const Operator& rho) { return apply(rho); }, dim());
}

KossakowskiForm kossakowski_from_lindblads(const std::vector<Operator>& lindblads,
                                           const std::vector<Operator>& basis) {
  const ComplexMatrix c = expand_in_basis(lindblads, basis);
  ComplexMatrix a = c.adjoint() * c;
  return KossakowskiForm(basis, std::move(a));
}

}  // namespace qsse
