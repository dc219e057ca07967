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

#include <functional>
#include <vector>

#include "qsse/types.hpp"

namespace qsse {

// ---------------------------------------------------------------------------
// Elementary operator algebra
// ---------------------------------------------------------------------------

Operator dagger(const Operator& a);
Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

// ||A - A^dag||_F <= tol * max(1, ||A||_F)
bool is_hermitian(const Operator& a, double tol = kTolHerm);
// ||A A^dag - A^dag A||_F <= tol * max(1, ||A||_F^2)
bool is_normal(const Operator& a, double tol = kTolNorm);

// Hermitian and anti-Hermitian parts: A = herm(A) + i * antiherm(A).
Operator hermitian_part(const Operator& a);
Operator antihermitian_part(const Operator& a);

// ---------------------------------------------------------------------------
// Vectorization (column-stacking, fixed project-wide)
//
// vec stacks columns, so vec(A rho B) = (B^T kron A) vec(rho). The j-th
// elementary basis matrix is unvec(e_j), i.e. E_{r,c} sits at index c*d + r.
// ---------------------------------------------------------------------------

ComplexVector vec(const Operator& a);
Operator unvec(const ComplexVector& v);

// Matrix of a linear map on d x d matrices: column j = vec(f(unvec(e_j))).
SuperOpMatrix superop_of_map(const std::function<Operator(const Operator&)>& f, int dim);

// Apply a superoperator matrix to a density matrix.
Operator apply_superop(const SuperOpMatrix& m, const Operator& rho);

// Choi matrix of the map represented by a superoperator: block (j,k) of size
// d x d equals the image of |j><k|. Hermitian whenever the map preserves
// Hermiticity; PSD iff the map is completely positive.
ComplexMatrix choi_matrix(const SuperOpMatrix& m, int dim);

// Column-wise trace test: the map sends every basis matrix to a traceless one.
bool is_trace_annihilating(const SuperOpMatrix& m, int dim, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Matrix exponential and kernels
// ---------------------------------------------------------------------------

// exp(t M) via scaling-and-squaring with Pade approximants. Throws on
// non-finite entries.
Operator expm(const Operator& m, double t = 1.0);

// Orthonormal basis of the kernel of M (as matrices), from an SVD with
// relative threshold tol on the singular values.
std::vector<Operator> null_space(const SuperOpMatrix& m, double tol = kNullSpaceThreshold);

// 1/2 ||rho - sigma||_1 for Hermitian inputs (Hermitized defensively).
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Hermitian within tol_herm, unit trace within tol_trace, eigenvalues
// bounded below by -tol_psd.
bool is_physical_density(const DensityMatrix& rho, double tol_herm = kTolHerm,
                         double tol_trace = 1e-9, double tol_psd = kTolPsd);

// ---------------------------------------------------------------------------
// Operator zoo
// ---------------------------------------------------------------------------

// Pauli matrices, alpha in {0,1,2,3}, sigma_0 = identity. Qubit basis order is
// (excited, ground): sigma_3|excited> = +|excited>, sigma_-|excited> = |ground>.
Operator pauli(int alpha);
Operator sigma_plus();
Operator sigma_minus();
Operator projector_up();    // P+ = |excited><excited|
Operator projector_down();  // P- = |ground><ground|

// Truncated oscillator operators in Fock order |0>, ..., |d-1>, a|n> = sqrt(n)|n-1>.
Operator annihilation(int dim);
Operator creation(int dim);
Operator number_op(int dim);

StateVector basis_state(int dim, int index);

// Hermitian su(d) basis (generalized Gell-Mann matrices), d^2 - 1 elements
// with Tr(l_i l_j) = 2 delta_ij. For d = 2 this is exactly {sigma_1, sigma_2,
// sigma_3}, in that order.
std::vector<Operator> hermitian_basis(int dim);

// Coefficients c (rows index operators) with ops[k] = sum_j c(k,j) basis[j],
// solved through the Gram matrix. Throws if some operator is not in the span.
ComplexMatrix expand_in_basis(const std::vector<Operator>& ops,
                              const std::vector<Operator>& basis,
                              double tol = 1e-9);

}  // namespace qsse
