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

// Dissipator expanded over a fixed Hermitian operator basis {l_j} with a
// Hermitian PSD coefficient matrix a:
//   D(rho) = -1/2 sum_ij a_ij ( {l_i l_j, rho} - 2 l_j rho l_i ).
// Equivalent to the diagonal form with L_k = sum_j c_kj l_j and a = c^dag c.
struct KossakowskiForm {
  std::vector<Operator> basis;
  ComplexMatrix coefficients;  // a_ij

  KossakowskiForm(std::vector<Operator> basis_in, ComplexMatrix a,
                  double tol = kTolHerm);

  int dim() const { return static_cast<int>(basis.front().rows()); }

  DensityMatrix apply(const DensityMatrix& rho) const;
  SuperOpMatrix matrix() const;
};

// Expand a diagonal-form channel list over a Hermitian basis and assemble the
// Kossakowski matrix a_ij = sum_k conj(c_ki) c_kj.
KossakowskiForm kossakowski_from_lindblads(const std::vector<Operator>& lindblads,
                                           const std::vector<Operator>& basis);

}  // namespace qsse
