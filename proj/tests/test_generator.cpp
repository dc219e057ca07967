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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "qsse/generator.hpp"
#include "qsse/kossakowski.hpp"
#include "test_util.hpp"

using namespace qsse;

namespace {

GklsGenerator phase_damping(double gamma, double omega) {
  return GklsGenerator(omega * pauli(1), {std::sqrt(gamma) * pauli(3)});
}

GklsGenerator energy_damping(double gamma_prime) {
  return GklsGenerator(Operator::Zero(2, 2), {std::sqrt(gamma_prime) * sigma_minus()});
}

GklsGenerator thermal_qubit(double omega, double beta, double gamma_prime, double gamma) {
  const double n = 1.0 / std::expm1(beta * omega);
  return GklsGenerator(0.5 * omega * pauli(3),
                       {std::sqrt(gamma_prime * (1.0 + n)) * sigma_minus(),
                        std::sqrt(gamma_prime * n) * sigma_plus(),
                        std::sqrt(gamma) * pauli(3)});
}

GklsGenerator random_generator(RngStream& rng, int d, int n_channels,
                               bool hermitian_channels) {
  std::vector<Operator> ls;
  for (int k = 0; k < n_channels; ++k) {
    ls.push_back(hermitian_channels ? test::random_hermitian(rng, d)
                                    : test::random_operator(rng, d));
  }
  return GklsGenerator(test::random_hermitian(rng, d), std::move(ls));
}

}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(GklsGenerator(sigma_minus(), {}), Error);
  CHECK_THROWS_AS(GklsGenerator(pauli(3), {Operator::Identity(3, 3)}), DimensionMismatch);

  GklsGenerator many(Operator::Zero(2, 2),
                     {pauli(1), pauli(2), pauli(3), sigma_minus()});
  CHECK(many.overcomplete());
  CHECK_FALSE(phase_damping(1.0, 0.0).overcomplete());
}

TEST_CASE("apply on the reference models") {
  const GklsGenerator pd = phase_damping(1.0, 0.0);
  const DensityMatrix rho = 0.5 * (pauli(0) + pauli(1));
  CHECK((qsse::apply(pd, rho) - (-pauli(1))).norm() < 1e-14);
  CHECK(qsse::apply(pd, 0.5 * pauli(0)).norm() < 1e-15);

  const GklsGenerator ed = energy_damping(1.0);
  CHECK((qsse::apply(ed, projector_up()) - (projector_down() - projector_up())).norm() < 1e-14);

  CHECK_THROWS_AS(qsse::apply(pd, DensityMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("apply preserves trace and hermiticity") {
  RngStream rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 3);
    const GklsGenerator g = random_generator(rng, d, 1 + static_cast<int>(rng.next_u64() % 3),
                                             trial % 2 == 0);
    const DensityMatrix rho = test::random_density(rng, d);
    const DensityMatrix drho = qsse::apply(g, rho);
    CHECK(std::abs(drho.trace()) < 1e-12 * std::max(1.0, drho.norm()));
    CHECK((drho - drho.adjoint()).norm() < 1e-12 * std::max(1.0, drho.norm()));
  }
}

TEST_CASE("apply_dual") {
  const GklsGenerator ed = energy_damping(0.7);
  // Oracle recorded by hand: the dual of the decay channel sends sigma_3 to
  // -2 gamma' P+.
  CHECK((qsse::apply_dual(ed, pauli(3)) - (-1.4 * projector_up())).norm() < 1e-14);

  RngStream rng(32);
  const GklsGenerator g = random_generator(rng, 3, 2, false);
  CHECK(qsse::apply_dual(g, Operator::Identity(3, 3)).norm() < 1e-13);

  const GklsGenerator pd = phase_damping(0.9, 0.0);
  CHECK((qsse::apply_dual(pd, pauli(1)) - (-1.8 * pauli(1))).norm() < 1e-14);
}

TEST_CASE("duality pairing") {
  RngStream rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 3);  // up to 4
    const GklsGenerator g = random_generator(rng, d, 1 + static_cast<int>(rng.next_u64() % 3),
                                             false);
    const DensityMatrix rho = test::random_density(rng, d);
    const Operator a = test::random_operator(rng, d);
    const Complex lhs = (qsse::apply(g, rho, false) * a).trace();
    const Complex rhs = (rho * qsse::apply_dual(g, a, false)).trace();
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
    // Same pairing with the Hamiltonian part switched on.
    const Complex lhs_h = (qsse::apply(g, rho, true) * a).trace();
    const Complex rhs_h = (rho * qsse::apply_dual(g, a, true)).trace();
    CHECK(std::abs(lhs_h - rhs_h) < 1e-10 * std::max(1.0, std::abs(lhs_h)));
  }
}

TEST_CASE("h2_ito") {
  const GklsGenerator pd = phase_damping(0.8, 0.0);
  CHECK((h2_ito(pd) - 0.4 * pauli(0)).norm() < 1e-15);

  const double gp = 1.3, n = 0.6, gamma = 0.4;
  const GklsGenerator th = thermal_qubit(1.0, std::log((n + 1.0) / n), gp, gamma);
  const Operator expected = 0.5 * gp * (1.0 + n) * projector_up() +
                            0.5 * gp * n * projector_down() + 0.5 * gamma * pauli(0);
  CHECK((h2_ito(th) - expected).norm() < 1e-12);

  // Hermitian and positive semi-definite for any channel set.
  RngStream rng(30);
  const GklsGenerator rough = random_generator(rng, 3, 3, false);
  const Operator h2 = h2_ito(rough);
  CHECK(is_hermitian(h2, 1e-12));
  Eigen::SelfAdjointEigenSolver<Operator> es(h2, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() > -1e-12);

  const GklsGenerator empty(Operator::Zero(2, 2), {});
  CHECK(h2_ito(empty).norm() == 0.0);
}

TEST_CASE("to_stratonovich on the reference models") {
  const double gamma = 0.8, omega = 0.5;
  const StratonovichForm pd = to_stratonovich(phase_damping(gamma, omega));
  CHECK((pd.h1s - omega * pauli(1)).norm() < 1e-14);
  CHECK(pd.h2s.norm() < 1e-14);

  const double gp = 1.1;
  const StratonovichForm ed = to_stratonovich(energy_damping(gp));
  CHECK(ed.h1s.norm() < 1e-14);
  CHECK((ed.h2s - 0.5 * gp * projector_up()).norm() < 1e-14);

  const double n = 0.7;
  const StratonovichForm th =
      to_stratonovich(thermal_qubit(1.0, std::log((n + 1.0) / n), gp, 0.3));
  const Operator expected =
      0.5 * gp * (1.0 + n) * projector_up() + 0.5 * gp * n * projector_down();
  CHECK((th.h2s - expected).norm() < 1e-12);
}

TEST_CASE("stratonovich consistency and hermiticity") {
  RngStream rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 3);
    const bool herm = trial % 2 == 0;
    const GklsGenerator g = random_generator(rng, d, 1 + static_cast<int>(rng.next_u64() % 3),
                                             herm);
    const StratonovichForm s = to_stratonovich(g);
    CHECK(is_hermitian(s.h1s, 1e-12));
    CHECK(is_hermitian(s.h2s, 1e-12));

    // Removing the Ito correction (i/2) sum L^2 recovers H1 - i H2.
    Operator correction = Operator::Zero(d, d);
    for (const auto& l : g.lindblads) {
      correction += 0.5 * Complex(0, 1) * (l * l);
    }
    const Operator lhs = s.h1s - Complex(0, 1) * s.h2s - correction;
    const Operator rhs = g.hamiltonian - Complex(0, 1) * h2_ito(g);
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));

    // h2s vanishes exactly when every channel is Hermitian.
    double max_nonherm = 0.0;
    for (const auto& l : g.lindblads) {
      max_nonherm = std::max(max_nonherm, (l - l.adjoint()).norm());
    }
    const double scale = std::max(1.0, h2_ito(g).norm());
    if (herm) {
      CHECK(s.h2s.norm() <= 1e-10 * scale);
    } else {
      CHECK((s.h2s.norm() <= 1e-10 * scale) == (max_nonherm <= 1e-8));
    }
  }
}

TEST_CASE("is_self_dual") {
  CHECK(is_self_dual(phase_damping(1.0, 0.0)));
  CHECK(is_self_dual(phase_damping(1.0, 2.0)));  // Hamiltonian part excluded
  CHECK_FALSE(is_self_dual(energy_damping(1.0)));

  const double c = 0.8;
  const GklsGenerator pair(Operator::Zero(2, 2),
                           {c * sigma_minus(), c * sigma_plus()});
  CHECK(is_self_dual(pair));

  // Gauge freedom: a phase on each channel changes nothing.
  RngStream rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 3);
    const GklsGenerator g = random_generator(rng, d, 2, trial % 2 == 0);
    std::vector<Operator> gauged;
    for (const auto& l : g.lindblads) {
      gauged.push_back(std::polar(1.0, 2.0 * M_PI * rng.next_uniform()) * l);
    }
    const GklsGenerator g2(g.hamiltonian, gauged);
    CHECK(is_self_dual(g, 1e-9) == is_self_dual(g2, 1e-9));
  }
}

TEST_CASE("trace preservation flags") {
  RngStream rng(36);
  CHECK(is_trace_preserving(random_generator(rng, 3, 2, false)));
  CHECK(is_trace_preserving(GklsGenerator(Operator::Zero(2, 2), {})));
}

TEST_CASE("evolve_exact") {
  const double gamma = 0.6;
  const GklsGenerator pd = phase_damping(gamma, 0.0);
  const DensityMatrix rho0 = 0.5 * (pauli(0) + pauli(1));
  const std::vector<double> times{0.0, 0.3, 1.0, 2.0};
  const auto rhos = evolve_exact(pd, rho0, times);
  REQUIRE(rhos.size() == times.size());
  CHECK((rhos[0] - rho0).norm() < 1e-14);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double x1 = (rhos[i] * pauli(1)).trace().real();
    CHECK(std::abs(x1 - std::exp(-2.0 * gamma * times[i])) < 1e-10);
    CHECK(std::abs(rhos[i].trace().real() - 1.0) < 1e-9);
    CHECK((rhos[i] - rhos[i].adjoint()).norm() < 1e-9);
  }

  const double gp = 0.9;
  const auto decay = evolve_exact(energy_damping(gp), projector_up(), times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double pop = decay[i](0, 0).real();
    CHECK(std::abs(pop - std::exp(-gp * times[i])) < 1e-10);
  }

  CHECK_THROWS_AS(evolve_exact(pd, rho0, {1.0, 0.5}), Error);
}

TEST_CASE("complete positivity of the exact propagator") {
  RngStream rng(37);
  const GklsGenerator g = random_generator(rng, 3, 2, false);
  const SuperOpMatrix liou = liouvillian_matrix(g);
  for (double t : {0.1, 0.7, 2.0}) {
    SuperOpMatrix prop = expm(liou, t);
    const ComplexMatrix choi = choi_matrix(prop, 3);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (choi + choi.adjoint()),
                                                    Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("stationary states") {
  // Thermal qubit at n = 1: populations 1/3 excited, 2/3 ground.
  const GklsGenerator th = thermal_qubit(1.0, std::log(2.0), 1.0, 0.2);
  const auto states = stationary_states(th);
  REQUIRE(states.size() == 1);
  DensityMatrix expected = DensityMatrix::Zero(2, 2);
  expected(0, 0) = 1.0 / 3.0;
  expected(1, 1) = 2.0 / 3.0;
  CHECK(trace_distance(states[0], expected) < 1e-10);
  CHECK(qsse::apply(th, states[0]).norm() < 1e-9);

  const auto ground = stationary_states(energy_damping(1.0));
  REQUIRE(ground.size() == 1);
  CHECK(trace_distance(ground[0], projector_down()) < 1e-10);

  // Truncated oscillator decay lands in the Fock vacuum.
  const int d = 8;
  const GklsGenerator osc(Operator::Zero(d, d), {annihilation(d)});
  const auto vac = stationary_states(osc);
  REQUIRE(vac.size() == 1);
  DensityMatrix vacuum = DensityMatrix::Zero(d, d);
  vacuum(0, 0) = 1.0;
  CHECK(trace_distance(vac[0], vacuum) < 1e-9);
}

TEST_CASE("kossakowski form matches the diagonal form") {
  const auto paulis = hermitian_basis(2);

  // Single dephasing channel: coefficients (0, 0, sqrt(gamma)).
  const double gamma = 0.7;
  ComplexMatrix c(1, 3);
  c << 0.0, 0.0, std::sqrt(gamma);
  ComplexMatrix a = c.adjoint() * c;
  CHECK(std::abs(a(2, 2).real() - gamma) < 1e-15);
  const KossakowskiForm kd(paulis, a);
  const GklsGenerator diag(Operator::Zero(2, 2), {std::sqrt(gamma) * pauli(3)});
  CHECK((kd.matrix() - dissipator_matrix(diag)).norm() < 1e-12);

  // Thermal triple: the sigma_-/sigma_+ channels couple the (1,2) basis
  // directions with imaginary off-diagonal weights.
  const double gp = 1.3, n = 0.8;
  const std::vector<Operator> ls{std::sqrt(gp * (1.0 + n)) * sigma_minus(),
                                 std::sqrt(gp * n) * sigma_plus(),
                                 std::sqrt(gamma) * pauli(3)};
  const KossakowskiForm kt = kossakowski_from_lindblads(ls, paulis);
  CHECK(std::abs(kt.coefficients(0, 1) - Complex(0.0, -gp / 4.0)) < 1e-12);
  CHECK(std::abs(kt.coefficients(1, 0) - Complex(0.0, gp / 4.0)) < 1e-12);
  CHECK(std::abs(kt.coefficients(0, 0) - gp * (1.0 + 2.0 * n) / 4.0) < 1e-12);
  const GklsGenerator diag_th(Operator::Zero(2, 2), ls);
  CHECK((kt.matrix() - dissipator_matrix(diag_th)).norm() < 1e-10);

  // Random coefficient matrices, both routes agree as superoperators.
  RngStream rng(38);
  for (int trial = 0; trial < 10; ++trial) {
    const int rows = 1 + static_cast<int>(rng.next_u64() % 4);
    const ComplexMatrix cr = test::random_matrix(rng, rows, 3);
    std::vector<Operator> lr;
    for (int k = 0; k < rows; ++k) {
      Operator l = Operator::Zero(2, 2);
      for (int j = 0; j < 3; ++j) {
        l += cr(k, j) * paulis[static_cast<std::size_t>(j)];
      }
      lr.push_back(l);
    }
    const KossakowskiForm kf(paulis, cr.adjoint() * cr);
    const GklsGenerator gd(Operator::Zero(2, 2), lr);
    const SuperOpMatrix lhs = kf.matrix();
    const SuperOpMatrix rhs = dissipator_matrix(gd);
    CHECK((lhs - rhs).norm() < 1e-9 * std::max(1.0, rhs.norm()));
  }
}
