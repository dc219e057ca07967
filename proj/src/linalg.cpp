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

#include "qsse/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace qsse {

namespace {

void require_square(const Operator& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch(std::string(who) + ": operator is not square");
  }
}

void require_same_dim(const Operator& a, const Operator& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(who) + ": dimension mismatch");
  }
}

}  // namespace

Operator dagger(const Operator& a) { return a.adjoint(); }

Operator commutator(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Operator anticommutator(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

bool is_hermitian(const Operator& a, double tol) {
  require_square(a, "is_hermitian");
  const double scale = std::max(1.0, a.norm());
  return (a - a.adjoint()).norm() <= tol * scale;
}

bool is_normal(const Operator& a, double tol) {
  require_square(a, "is_normal");
  const double n = a.norm();
  const double scale = std::max(1.0, n * n);
  return (a * a.adjoint() - a.adjoint() * a).norm() <= tol * scale;
}

Operator hermitian_part(const Operator& a) { return 0.5 * (a + a.adjoint()); }

Operator antihermitian_part(const Operator& a) {
  return (a - a.adjoint()) / Complex(0.0, 2.0);
}

ComplexVector vec(const Operator& a) {
  return Eigen::Map<const ComplexVector>(a.data(), a.size());
}

Operator unvec(const ComplexVector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size()) {
    throw DimensionMismatch("unvec: length is not a perfect square");
  }
  return Eigen::Map<const Operator>(v.data(), d, d);
}

SuperOpMatrix superop_of_map(const std::function<Operator(const Operator&)>& f, int dim) {
  const Eigen::Index d = dim;
  SuperOpMatrix m(d * d, d * d);
  Operator basis = Operator::Zero(d, d);
  for (Eigen::Index j = 0; j < d * d; ++j) {
    basis(j % d, j / d) = 1.0;  // unvec(e_j)
    m.col(j) = vec(f(basis));
    basis(j % d, j / d) = 0.0;
  }
  return m;
}

Operator apply_superop(const SuperOpMatrix& m, const Operator& rho) {
  if (m.cols() != rho.size()) {
    throw DimensionMismatch("apply_superop: dimension mismatch");
  }
  return unvec(m * vec(rho));
}

ComplexMatrix choi_matrix(const SuperOpMatrix& m, int dim) {
  const Eigen::Index d = dim;
  ComplexMatrix choi(d * d, d * d);
  Operator e = Operator::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      e(j, k) = 1.0;
      choi.block(j * d, k * d, d, d) = apply_superop(m, e);
      e(j, k) = 0.0;
    }
  }
  return choi;
}

bool is_trace_annihilating(const SuperOpMatrix& m, int dim, double tol) {
  const Eigen::Index d = dim;
  if (m.rows() != d * d || m.cols() != d * d) {
    throw DimensionMismatch("is_trace_annihilating: bad superoperator shape");
  }
  const double scale = std::max(1.0, m.norm());
  for (Eigen::Index j = 0; j < d * d; ++j) {
    Complex tr = 0.0;
    for (Eigen::Index c = 0; c < d; ++c) {
      tr += m(c * d + c, j);
    }
    if (std::abs(tr) > tol * scale) {
      return false;
    }
  }
  return true;
}

Operator expm(const Operator& m, double t) {
  require_square(m, "expm");
  if (!m.allFinite() || !std::isfinite(t)) {
    throw Error("expm: non-finite input");
  }
  return (t * m).exp();
}

std::vector<Operator> null_space(const SuperOpMatrix& m, double tol) {
  if (tol < 0.0) {
    throw Error("null_space: tol must be nonnegative");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
  std::vector<Operator> kernel;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= cutoff) {
      kernel.push_back(unvec(svd.matrixV().col(i)));
    }
  }
  return kernel;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_distance");
  const Operator delta = hermitian_part(rho - sigma);
  Eigen::SelfAdjointEigenSolver<Operator> es(delta, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

bool is_physical_density(const DensityMatrix& rho, double tol_herm,
                         double tol_trace, double tol_psd) {
  if (rho.rows() != rho.cols()) {
    return false;
  }
  if (!is_hermitian(rho, tol_herm)) {
    return false;
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol_trace) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(rho),
                                             Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol_psd;
}

Operator pauli(int alpha) {
  Operator s(2, 2);
  switch (alpha) {
    case 0:
      s << 1, 0, 0, 1;
      break;
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
    default:
      throw Error("pauli: index must be in 0..3");
  }
  return s;
}

Operator sigma_plus() {
  Operator s = Operator::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

Operator sigma_minus() {
  Operator s = Operator::Zero(2, 2);
  s(1, 0) = 1.0;
  return s;
}

Operator projector_up() {
  Operator p = Operator::Zero(2, 2);
  p(0, 0) = 1.0;
  return p;
}

Operator projector_down() {
  Operator p = Operator::Zero(2, 2);
  p(1, 1) = 1.0;
  return p;
}

Operator annihilation(int dim) {
  if (dim < 2) {
    throw Error("annihilation: need at least two levels");
  }
  Operator a = Operator::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Operator creation(int dim) { return annihilation(dim).adjoint().eval(); }

Operator number_op(int dim) {
  Operator n = Operator::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    n(k, k) = static_cast<double>(k);
  }
  return n;
}

StateVector basis_state(int dim, int index) {
  if (index < 0 || index >= dim) {
    throw Error("basis_state: index out of range");
  }
  StateVector v = StateVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

std::vector<Operator> hermitian_basis(int dim) {
  if (dim < 2) {
    throw Error("hermitian_basis: dim must be >= 2");
  }
  std::vector<Operator> basis;
  basis.reserve(static_cast<std::size_t>(dim) * dim - 1);
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      Operator sym = Operator::Zero(dim, dim);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      basis.push_back(sym);
      Operator asym = Operator::Zero(dim, dim);
      asym(j, k) = Complex(0, -1);
      asym(k, j) = Complex(0, 1);
      basis.push_back(asym);
    }
  }
  for (int l = 1; l < dim; ++l) {
    Operator diag = Operator::Zero(dim, dim);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) {
      diag(j, j) = norm;
    }
    diag(l, l) = -l * norm;
    basis.push_back(diag);
  }
  // d = 2 yields exactly (sigma_1, sigma_2, sigma_3).
  return basis;
}

ComplexMatrix expand_in_basis(const std::vector<Operator>& ops,
                              const std::vector<Operator>& basis,
                              double tol) {
  if (basis.empty()) {
    throw Error("expand_in_basis: empty basis");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      gram(i, j) = (basis[i].adjoint() * basis[j]).trace();
    }
  }
  const auto solver = gram.fullPivLu();
  ComplexMatrix coeffs(static_cast<Eigen::Index>(ops.size()), m);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    ComplexVector rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      rhs(i) = (basis[i].adjoint() * ops[k]).trace();
    }
    ComplexVector c = solver.solve(rhs);
    Operator rebuilt = Operator::Zero(ops[k].rows(), ops[k].cols());
    for (Eigen::Index i = 0; i < m; ++i) {
      rebuilt += c(i) * basis[i];
    }
    if ((rebuilt - ops[k]).norm() > tol * std::max(1.0, ops[k].norm())) {
      throw Error("expand_in_basis: operator is not in the span of the basis");
    }
    coeffs.row(k) = c.transpose();
  }
  return coeffs;
}

}  // namespace qsse
