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

#include "qsse/noise.hpp"
#include "test_util.hpp"

using namespace qsse;

TEST_CASE("wiener sampling basics") {
  RngStream rng(42);
  const WienerBatch batch = sample_wiener(3, 0.01, rng);
  REQUIRE(batch.channels() == 3);

  // Regression fixture recorded from the frozen generator: seed 42, dt 0.01.
  CHECK(batch.increments(0) == doctest::Approx(-0.026860736946209503).epsilon(1e-12));
  CHECK(batch.increments(1) == doctest::Approx(-0.0054462170108150951).epsilon(1e-12));
  CHECK(batch.increments(2) == doctest::Approx(-0.057857537684395603).epsilon(1e-12));

  RngStream rng2(99);
  CHECK_THROWS_AS(sample_wiener(2, 0.0, rng2), Error);
  CHECK_THROWS_AS(sample_wiener(2, -1.0, rng2), Error);
}

TEST_CASE("wiener sample statistics") {
  RngStream rng(7);
  const int n = 1000000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const WienerBatch batch = sample_wiener(1, 1.0, rng);
    sum += batch.increments(0);
    sum_sq += batch.increments(0) * batch.increments(0);
  }
  CHECK(std::abs(sum / n) < 5e-3);            // 5 sigma / sqrt(n)
  CHECK(std::abs(sum_sq / n - 1.0) < 7.1e-3); // 5 * sqrt(2/n)
}

TEST_CASE("stream splitting is reproducible and decorrelated") {
  RngStream a = RngStream::child(123, 7);
  RngStream b = RngStream::child(123, 7);
  RngStream other = RngStream::child(123, 8);
  CHECK(a.next_u64() == b.next_u64());
  CHECK(child_seed(123, 7) != child_seed(123, 8));
  CHECK(a.next_u64() != other.next_u64());
}

TEST_CASE("model_from_coeffs") {
  const ComplexMatrix eye = ComplexMatrix::Identity(3, 3);
  const ComplexNoiseModel trivial = model_from_coeffs(eye);
  CHECK((trivial.covariance - eye).norm() == 0.0);
  CHECK((trivial.relation - eye).norm() == 0.0);

  const double gamma = 0.6;
  ComplexMatrix c(1, 3);
  c << 0.0, 0.0, std::sqrt(gamma);
  const ComplexNoiseModel single = model_from_coeffs(c);
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(2, 2) = gamma;
  CHECK((single.covariance - expected).norm() < 1e-15);
  CHECK((single.relation - expected).norm() < 1e-15);
}

TEST_CASE("check_picinbono") {
  const ComplexMatrix eye = ComplexMatrix::Identity(3, 3);
  CHECK(check_picinbono(eye, ComplexMatrix::Zero(3, 3)));
  CHECK_FALSE(check_picinbono(eye, 2.0 * eye));

  RngStream rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_u64() % 3);
    const int n = 1 + static_cast<int>(rng.next_u64() % 5);
    const ComplexNoiseModel model = model_from_coeffs(test::random_matrix(rng, n, m));
    CHECK(check_picinbono(model.covariance, model.relation));
  }

  // Relation matrix outside the support of the covariance.
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  b(1, 1) = 0.5;
  CHECK_FALSE(check_picinbono(a, b));
}

TEST_CASE("minimal_reduction on diagonal input") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;  // deliberately ascending
  a(1, 1) = 2.0;
  const MinimalReduction red = minimal_reduction(a);
  CHECK(red.gammas(0) == doctest::Approx(2.0));
  CHECK(red.gammas(1) == doctest::Approx(1.0));
  CHECK((red.chosen_b - a).norm() < 1e-12);
  CHECK(red.active_noise_count() == 2);
  // Permutation structure: |U_01| = 1, |U_10| = 1.
  CHECK(std::abs(red.unitary(0, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(red.unitary(1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("minimal_reduction edge cases") {
  const MinimalReduction zero = minimal_reduction(ComplexMatrix::Zero(3, 3));
  CHECK(zero.active_noise_count() == 0);
  CHECK(zero.chosen_b.norm() == 0.0);

  RngStream rng(52);
  ComplexVector v(3);
  for (int i = 0; i < 3; ++i) {
    v(i) = Complex(rng.next_normal(), rng.next_normal());
  }
  const ComplexMatrix rank1 = v * v.adjoint();
  const MinimalReduction red = minimal_reduction(rank1);
  CHECK(red.active_noise_count() == 1);
  CHECK(red.gammas(0) == doctest::Approx(v.squaredNorm()));

  ComplexMatrix not_psd = -ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(minimal_reduction(not_psd), Error);
}

TEST_CASE("minimal_reduction roundtrip and noise count") {
  RngStream rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_u64() % 4);
    const int rank = 1 + static_cast<int>(rng.next_u64() % m);
    const ComplexMatrix c = test::random_matrix(rng, rank, m);
    const ComplexMatrix a = c.adjoint() * c;  // rank-deficient when rank < m
    const MinimalReduction red = minimal_reduction(a);

    const ComplexMatrix rebuilt =
        red.unitary.adjoint() * red.gammas.asDiagonal() * red.unitary;
    CHECK((rebuilt - a).norm() <= 1e-10 * std::max(1.0, a.norm()));

    CHECK(red.active_noise_count(1e-8) == rank);
    CHECK(red.active_noise_count(1e-8) <= m);   // d^2 - 1 channels suffice
    CHECK((red.chosen_b - red.chosen_b.transpose()).norm() < 1e-12);

    // Feeding the reduced coefficients back reproduces (a, chosen_b).
    const ComplexNoiseModel model = model_from_coeffs(red.coefficients());
    CHECK((model.covariance - a).norm() < 1e-10 * std::max(1.0, a.norm()));
    CHECK((model.relation - red.chosen_b).norm() < 1e-10 * std::max(1.0, a.norm()));
    CHECK(check_picinbono(a, red.chosen_b));
  }
}

TEST_CASE("reduced increments are real in the rotated frame") {
  RngStream rng(54);
  const ComplexMatrix c = test::random_matrix(rng, 3, 3);
  const MinimalReduction red = minimal_reduction(c.adjoint() * c);
  const ComplexNoiseModel model = model_from_coeffs(red.coefficients());
  for (int draw = 0; draw < 20; ++draw) {
    const ComplexVector dz = sample_complex(model, 1e-3, rng);
    const ComplexVector rotated = red.unitary.conjugate() * dz;
    CHECK(rotated.imag().cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("sample_complex") {
  RngStream rng(55);
  const ComplexNoiseModel trivial = model_from_coeffs(ComplexMatrix::Identity(3, 3));
  const ComplexVector dz = sample_complex(trivial, 0.01, rng);
  CHECK(dz.imag().cwiseAbs().maxCoeff() == 0.0);

  const ComplexNoiseModel null_model = model_from_coeffs(ComplexMatrix::Zero(2, 2));
  CHECK(sample_complex(null_model, 0.01, rng).norm() == 0.0);
}

TEST_CASE("sample_complex statistics match (a, b)") {
  RngStream rng(56);
  ComplexMatrix c(2, 2);
  c << Complex(1.0, 0.0), Complex(0.0, 0.5), Complex(0.3, -0.2), Complex(0.0, 1.0);
  const ComplexNoiseModel model = model_from_coeffs(c);
  const double dt = 1.0;
  const int n = 1000000;
  ComplexMatrix cov = ComplexMatrix::Zero(2, 2);
  ComplexMatrix rel = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < n; ++i) {
    const ComplexVector dz = sample_complex(model, dt, rng);
    cov += dz.conjugate() * dz.transpose();
    rel += dz * dz.transpose();
  }
  cov /= static_cast<double>(n);
  rel /= static_cast<double>(n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double bound = 5.0 *
          std::sqrt(model.covariance(i, i).real() * model.covariance(j, j).real()) *
          dt / std::sqrt(static_cast<double>(n));
      CHECK(std::abs(cov(i, j) - model.covariance(i, j) * dt) < bound);
      CHECK(std::abs(rel(i, j) - model.relation(i, j) * dt) < bound);
    }
  }
}
