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

#include "qsse/generator.hpp"

#include <algorithm>
#include <cmath>

namespace qsse {

namespace {
constexpr Complex kI{0.0, 1.0};

void require_dim(const GklsGenerator& g, const Operator& x, const char* who) {
  if (x.rows() != g.dim() || x.cols() != g.dim()) {
    throw DimensionMismatch(std::string(who) + ": operand dimension mismatch");
  }
}
}  // namespace

GklsGenerator::GklsGenerator(Operator h, std::vector<Operator> ls, double tol)
    : hamiltonian(std::move(h)), lindblads(std::move(ls)) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw DimensionMismatch("GklsGenerator: Hamiltonian is not square");
  }
  if (!is_hermitian(hamiltonian, tol)) {
    throw Error("GklsGenerator: Hamiltonian is not Hermitian");
  }
  for (const auto& l : lindblads) {
    if (l.rows() != hamiltonian.rows() || l.cols() != hamiltonian.cols()) {
      throw DimensionMismatch("GklsGenerator: Lindblad operator dimension mismatch");
    }
  }
}

DensityMatrix apply(const GklsGenerator& g, const DensityMatrix& rho,
                    bool include_hamiltonian) {
  require_dim(g, rho, "apply");
  DensityMatrix out = DensityMatrix::Zero(g.dim(), g.dim());
  if (include_hamiltonian) {
    out -= kI * commutator(g.hamiltonian, rho);
  }
  for (const auto& l : g.lindblads) {
    const Operator ldl = l.adjoint() * l;
    out -= 0.5 * (anticommutator(ldl, rho) - 2.0 * (l * rho * l.adjoint()));
  }
  return out;
}

Operator apply_dual(const GklsGenerator& g, const Operator& a,
                    bool include_hamiltonian) {
  require_dim(g, a, "apply_dual");
  Operator out = Operator::Zero(g.dim(), g.dim());
  if (include_hamiltonian) {
    out += kI * commutator(g.hamiltonian, a);
  }
  for (const auto& l : g.lindblads) {
    const Operator ldl = l.adjoint() * l;
    out -= 0.5 * (anticommutator(ldl, a) - 2.0 * (l.adjoint() * a * l));
  }
  return out;
}

Operator h2_ito(const GklsGenerator& g) {
  Operator h2 = Operator::Zero(g.dim(), g.dim());
  for (const auto& l : g.lindblads) {
    h2 += 0.5 * (l.adjoint() * l);
  }
  return h2;
}

StratonovichForm to_stratonovich(const GklsGenerator& g) {
  const int d = g.dim();
  Operator h1s = g.hamiltonian;
  Operator h2s = Operator::Zero(d, d);
  for (const auto& l : g.lindblads) {
    const Operator lsq = l * l;
    h1s -= 0.5 * antihermitian_part(lsq);
    h2s += 0.5 * (l.adjoint() * l - hermitian_part(lsq));
  }
  return StratonovichForm{std::move(h1s), std::move(h2s), g.lindblads};
}

SuperOpMatrix dissipator_matrix(const GklsGenerator& g) {
  return superop_of_map([&g](const Operator& rho) { return apply(g, rho, false); },
                        g.dim());
}

SuperOpMatrix dual_dissipator_matrix(const GklsGenerator& g) {
  return superop_of_map([&g](const Operator& a) { return apply_dual(g, a, false); },
                        g.dim());
}

SuperOpMatrix liouvillian_matrix(const GklsGenerator& g) {
  return superop_of_map([&g](const Operator& rho) { return apply(g, rho, true); },
                        g.dim());
}

bool is_self_dual(const GklsGenerator& g, double tol) {
  const SuperOpMatrix forward = dissipator_matrix(g);
  const SuperOpMatrix dual = dual_dissipator_matrix(g);
  return (forward - dual).norm() <= tol * std::max(1.0, forward.norm());
}

bool is_trace_preserving(const GklsGenerator& g, double tol) {
  const Operator id = Operator::Identity(g.dim(), g.dim());
  double scale = 1.0;
  for (const auto& l : g.lindblads) {
    scale = std::max(scale, l.squaredNorm());
  }
  return apply_dual(g, id, true).norm() <= tol * scale;
}

std::vector<DensityMatrix> evolve_exact(const GklsGenerator& g,
                                        const DensityMatrix& rho0,
                                        const std::vector<double>& times) {
  require_dim(g, rho0, "evolve_exact");
  if (!std::is_sorted(times.begin(), times.end())) {
    throw Error("evolve_exact: times must be sorted ascending");
  }
  const SuperOpMatrix liou = liouvillian_matrix(g);
  const ComplexVector v0 = vec(rho0);
  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  for (double t : times) {
    if (t < 0.0) {
      throw Error("evolve_exact: negative time");
    }
    out.push_back(unvec(expm(liou, t) * v0));
  }
  return out;
}

std::vector<DensityMatrix> stationary_states(const GklsGenerator& g, double tol) {
  const std::vector<Operator> kernel = null_space(liouvillian_matrix(g), tol);
  std::vector<DensityMatrix> states;
  for (const auto& k : kernel) {
    const Operator h = hermitian_part(k);
    const Complex tr = h.trace();
    if (std::abs(tr) <= 1e-8 * std::max(1.0, h.norm())) {
      continue;  // traceless kernel direction, not a state on its own
    }
    states.push_back(h / tr.real());
  }
  if (states.empty()) {
    throw Error("stationary_states: kernel contains no trace-carrying element");
  }
  return states;
}

}  // namespace qsse
