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

#include "qsse/classifier.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace qsse {

namespace {

// Single-channel dissipator action.
Operator channel_apply(const Operator& l, const Operator& rho) {
  const Operator ldl = l.adjoint() * l;
  return l * rho * l.adjoint() - 0.5 * anticommutator(ldl, rho);
}

double canonical_angle(double alpha) {
  // wrap into (-pi, pi]
  alpha = std::remainder(alpha, 2.0 * M_PI);
  if (alpha <= -M_PI) {
    alpha += 2.0 * M_PI;
  }
  return alpha;
}

}  // namespace

SelfDualPhase self_dual_phase(const Operator& l, double tol) {
  if (l.rows() != l.cols()) {
    throw DimensionMismatch("self_dual_phase: operator is not square");
  }
  const double scale = l.norm();
  if (scale == 0.0) {
    return SelfDualPhase{std::nullopt, true};
  }
  Eigen::Index p = 0, q = 0;
  l.cwiseAbs().maxCoeff(&p, &q);
  const Complex ratio = std::conj(l(q, p)) / l(p, q);  // (L^dag)_pq / L_pq
  const double alpha = std::arg(ratio);
  const Operator residual = l.adjoint() - std::polar(1.0, alpha) * l;
  if (residual.norm() <= tol * scale) {
    return SelfDualPhase{canonical_angle(alpha), false};
  }
  return SelfDualPhase{std::nullopt, false};
}

ChannelVerdict classify_single(const Operator& l, double tol) {
  if (l.rows() != l.cols()) {
    throw DimensionMismatch("classify_single: operator is not square");
  }
  ChannelVerdict verdict;
  verdict.self_dual_phase = self_dual_phase(l, tol).alpha;
  if (!is_normal(l, tol)) {
    verdict.kind = ChannelKind::Decay;
    return verdict;
  }
  verdict.kind = ChannelKind::Dephasing;

  // The Schur basis of a normal operator is an orthonormal eigenbasis.
  Eigen::ComplexSchur<Operator> schur(l, /*computeU=*/true);
  std::vector<StateVector> basis;
  basis.reserve(static_cast<std::size_t>(l.rows()));
  for (Eigen::Index n = 0; n < l.rows(); ++n) {
    basis.push_back(schur.matrixU().col(n));
  }

  // Certificate: the channel must annihilate every basis projector.
  const double scale = std::max(1.0, l.squaredNorm());
  for (const auto& e : basis) {
    const Operator proj = e * e.adjoint();
    if (channel_apply(l, proj).norm() > tol * scale) {
      verdict.kind = ChannelKind::Decay;  // normality was borderline; demote
      return verdict;
    }
  }
  verdict.stable_basis = std::move(basis);
  return verdict;
}

std::vector<Operator> decompose_self_dual(const GklsGenerator& g, double tol) {
  if (!is_self_dual(g, tol)) {
    throw NotSelfDual("decompose_self_dual: generator is not self-dual");
  }
  const int d = g.dim();

  // Hermitian/anti-Hermitian split of each channel. Rebuilding with these
  // weight-one channels reproduces the symmetrized dissipator exactly.
  std::vector<Operator> parts;
  double scale = 0.0;
  for (const auto& l : g.lindblads) {
    scale = std::max(scale, l.norm());
    parts.push_back(hermitian_part(l));
    parts.push_back(antihermitian_part(l));
  }

  // Drop zeros, merge proportional members in quadrature: channels with
  // operators x M and y M equal one channel with sqrt(x^2 + y^2) M.
  std::vector<Operator> merged;
  std::vector<double> weights;
  const double zero_cut = 1e-12 * std::max(1.0, scale);
  for (const auto& x : parts) {
    const double nx = x.norm();
    if (nx <= zero_cut) {
      continue;
    }
    bool absorbed = false;
    for (std::size_t i = 0; i < merged.size(); ++i) {
      const Complex overlap = (merged[i].adjoint() * x).trace();
      const double lambda = overlap.real() / merged[i].squaredNorm();
      if ((x - lambda * merged[i]).norm() <= 1e-10 * nx) {
        weights[i] = std::hypot(weights[i], lambda);
        absorbed = true;
        break;
      }
    }
    if (!absorbed) {
      merged.push_back(x / nx);
      weights.push_back(nx);
    }
  }
  std::vector<Operator> out;
  out.reserve(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    out.push_back(weights[i] * merged[i]);
  }

  // Verify the rebuilt dissipator against the original.
  const SuperOpMatrix target = dissipator_matrix(g);
  const SuperOpMatrix rebuilt =
      dissipator_matrix(GklsGenerator(Operator::Zero(d, d), out));
  if ((rebuilt - target).norm() > tol * std::max(1.0, target.norm())) {
    throw Error("decompose_self_dual: rebuilt dissipator does not match");
  }
  return out;
}

ClassificationReport classify_generator(const GklsGenerator& g, double tol) {
  ClassificationReport report;
  report.generator_self_dual = is_self_dual(g, tol);
  for (const auto& l : g.lindblads) {
    report.per_channel.push_back(classify_single(l, tol));
  }
  report.channels_commute = true;
  for (std::size_t i = 0; i < g.lindblads.size() && report.channels_commute; ++i) {
    for (std::size_t j = i + 1; j < g.lindblads.size(); ++j) {
      const double scale =
          std::max(1.0, g.lindblads[i].norm() * g.lindblads[j].norm());
      if (commutator(g.lindblads[i], g.lindblads[j]).norm() > tol * scale) {
        report.channels_commute = false;
        break;
      }
    }
  }
  if (report.generator_self_dual) {
    report.hermitian_decomposition = decompose_self_dual(g, tol);
    report.classical_noise_dilation = true;
  } else {
    report.classical_noise_dilation = false;
  }
  return report;
}

}  // namespace qsse
