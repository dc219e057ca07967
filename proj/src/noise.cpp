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

#include "qsse/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

namespace qsse {

namespace {

// Support threshold for the pseudo-inverse in the admissibility check.
constexpr double kSupportThreshold = 1e-10;

void require_hermitian_psd(const ComplexMatrix& a, double tol, const char* who) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch(std::string(who) + ": matrix is not square");
  }
  const double scale = std::max(1.0, a.norm());
  if ((a - a.adjoint()).norm() > tol * scale) {
    throw Error(std::string(who) + ": matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol * scale) {
    throw Error(std::string(who) + ": matrix is not positive semi-definite (min eigenvalue " +
                std::to_string(es.eigenvalues().minCoeff()) + ")");
  }
}

}  // namespace

WienerBatch sample_wiener(int n_channels, double dt, RngStream& rng) {
  if (dt <= 0.0) {
    throw Error("sample_wiener: dt must be positive");
  }
  if (n_channels < 0) {
    throw Error("sample_wiener: negative channel count");
  }
  WienerBatch batch;
  batch.dt = dt;
  batch.increments.resize(n_channels);
  const double scale = std::sqrt(dt);
  for (int k = 0; k < n_channels; ++k) {
    batch.increments(k) = scale * rng.next_normal();
  }
  return batch;
}

ComplexNoiseModel model_from_coeffs(const ComplexMatrix& c) {
  ComplexNoiseModel model;
  model.coeffs = c;
  model.covariance = c.adjoint() * c;
  model.relation = c.transpose() * c;
  return model;
}

bool check_picinbono(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch("check_picinbono: shape mismatch");
  }
  require_hermitian_psd(a, tol, "check_picinbono");
  const double bscale = std::max(1.0, b.norm());
  if ((b - b.transpose()).norm() > tol * bscale) {
    throw Error("check_picinbono: relation matrix is not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()));
  const RealVector& evals = es.eigenvalues();
  const ComplexMatrix& v = es.eigenvectors();
  const double cutoff = kSupportThreshold * std::max(1.0, evals.cwiseAbs().maxCoeff());

  // Pseudo-inverse on the support, and the projector onto it.
  ComplexMatrix pinv = ComplexMatrix::Zero(a.rows(), a.cols());
  ComplexMatrix support = ComplexMatrix::Zero(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) > cutoff) {
      pinv += v.col(i) * v.col(i).adjoint() / evals(i);
      support += v.col(i) * v.col(i).adjoint();
    }
  }

  // b must live on the support of a: null(a) annihilates b on both sides,
  // so b = P^T b P with P the support projector.
  const ComplexMatrix off = b - support.transpose() * b * support;
  if (off.norm() > std::max(tol, kSupportThreshold) * bscale) {
    return false;
  }

  // Schur complement of the augmented covariance [[a*, b], [b^dag, a]]
  // with respect to its lower-right block; PSD exactly for admissible pairs.
  const ComplexMatrix schur = a.conjugate() - b * pinv * b.adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> schur_es(
      0.5 * (schur + schur.adjoint()), Eigen::EigenvaluesOnly);
  return schur_es.eigenvalues().minCoeff() >= -tol * std::max(1.0, a.norm());
}

ComplexMatrix MinimalReduction::coefficients() const {
  ComplexMatrix c = unitary;
  for (Eigen::Index k = 0; k < gammas.size(); ++k) {
    c.row(k) *= std::sqrt(std::max(0.0, gammas(k)));
  }
  return c;
}

int MinimalReduction::active_noise_count(double tol) const {
  const double cutoff = tol * std::max(1.0, gammas.size() ? gammas.maxCoeff() : 0.0);
  int count = 0;
  for (Eigen::Index k = 0; k < gammas.size(); ++k) {
    if (gammas(k) > cutoff) {
      ++count;
    }
  }
  return count;
}

MinimalReduction minimal_reduction(const ComplexMatrix& a, double tol) {
  require_hermitian_psd(a, tol, "minimal_reduction");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()));
  const Eigen::Index m = a.rows();

  // Deterministic ordering: descending eigenvalues, ties broken by the first
  // differing eigenvector component; each eigenvector gauged so its largest
  // entry is real positive.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  ComplexMatrix vecs = es.eigenvectors();
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::Index imax = 0;
    vecs.col(i).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = vecs(imax, i);
    if (std::abs(pivot) > 0.0) {
      vecs.col(i) *= std::conj(pivot) / std::abs(pivot);
    }
  }
  std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    if (es.eigenvalues()(x) != es.eigenvalues()(y)) {
      return es.eigenvalues()(x) > es.eigenvalues()(y);
    }
    for (Eigen::Index r = 0; r < m; ++r) {
      const Complex cx = vecs(r, x), cy = vecs(r, y);
      if (cx.real() != cy.real()) return cx.real() > cy.real();
      if (cx.imag() != cy.imag()) return cx.imag() > cy.imag();
    }
    return false;
  });

  MinimalReduction red;
  red.gammas.resize(m);
  red.unitary.resize(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    red.gammas(k) = std::max(0.0, es.eigenvalues()(order[static_cast<std::size_t>(k)]));
    // Row k of U is the conjugated eigenvector: a = U^dag diag(gamma) U.
    red.unitary.row(k) =
        vecs.col(order[static_cast<std::size_t>(k)]).conjugate().transpose();
  }
  red.chosen_b = red.unitary.transpose() * red.gammas.asDiagonal() * red.unitary;
  return red;
}

ComplexVector sample_complex(const ComplexNoiseModel& model, double dt,
                             RngStream& rng) {
  const int n = static_cast<int>(model.coeffs.rows());
  const WienerBatch batch = sample_wiener(n, dt, rng);
  return model.coeffs.transpose() * batch.increments.cast<Complex>();
}

}  // namespace qsse
