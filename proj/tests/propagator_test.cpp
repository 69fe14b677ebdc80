// Copyright 2026 The minact Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "minact/models.hpp"
#include "minact/propagator.hpp"
#include "support/oracles.hpp"

namespace minact {
namespace {

Eigen::MatrixXcd field_matrix(TwoLevelField h) {
  Eigen::MatrixXcd m(2, 2);
  m << h.z, h.x, h.x, -h.z;
  return m;
}

Eigen::VectorXcd random_state(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = {n01(rng), n01(rng)};
  return v.normalized();
}

TEST(TwoLevel, SplittingIsEigenvalueGap) {
  EXPECT_DOUBLE_EQ((TwoLevelField{3.0, 4.0}).splitting(), 10.0);
  EXPECT_DOUBLE_EQ((TwoLevelField{0.0, 0.0}).splitting(), 0.0);
}

TEST(TwoLevel, UnitaryAndMatchesEigendecomposition) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::uniform_real_distribution<double> dt(0.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const TwoLevelField h{u(rng), u(rng)};
    const double step = dt(rng);
    const Eigen::Matrix2cd p = two_level_propagator(h, step);
    ASSERT_LE((p.adjoint() * p - Eigen::Matrix2cd::Identity()).norm(), 1e-12);
    ASSERT_LE((Eigen::MatrixXcd(p) - testing::hermitian_expm(field_matrix(h), step)).norm(),
              1e-12);
  }
}

TEST(TwoLevel, ZeroFieldAndZeroStepAreIdentity) {
  EXPECT_LE((two_level_propagator({0.0, 0.0}, 1.0) - Eigen::Matrix2cd::Identity()).norm(), 0.0);
  EXPECT_LE((two_level_propagator({2.0, 1.0}, 0.0) - Eigen::Matrix2cd::Identity()).norm(), 1e-16);
}

TEST(TwoLevel, InPlaceStepMatchesMatrix) {
  std::mt19937_64 rng(11);
  const TwoLevelField h{0.3, -1.7};
  Eigen::Vector2cd psi = random_state(2, rng);
  const Eigen::Vector2cd expected = two_level_propagator(h, 0.25) * psi;
  apply_two_level_step(h, 0.25, psi);
  EXPECT_LE((psi - expected).norm(), 1e-15);
}

TEST(Krylov, MatchesExactExponential) {
  std::mt19937_64 rng(17);
  const FullyConnectedModel model(100.0, 160);
  for (double g : {0.1, 0.5, 0.9}) {
    const PentadiagonalMatrix h = model.hamiltonian(g);
    const Eigen::MatrixXcd dense = h.dense().cast<std::complex<double>>();
    for (double dt : {1e-3, 0.05, 0.5, 3.0}) {
      KrylovPropagator krylov(model.dimension());
      const Eigen::VectorXcd start = random_state(model.dimension(), rng);
      Eigen::VectorXcd psi = start;
      krylov.step(h, dt, psi);
      const Eigen::VectorXcd expected = testing::hermitian_expm(dense, dt) * start;
      EXPECT_LE((psi - expected).norm(), 1e-10) << "g=" << g << " dt=" << dt;
      EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
      EXPECT_LE(krylov.max_used(), 40);
    }
  }
}

TEST(Krylov, InvariantSubspaceTerminatesEarly) {
  // The vacuum of the harmonic limit is an eigenvector.
  const FullyConnectedModel model(10.0, 40);
  KrylovPropagator krylov(model.dimension());
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(model.dimension());
  psi[0] = 1.0;
  krylov.step(model.hamiltonian(0.0), 1.0, psi);
  EXPECT_NEAR(std::abs(psi[0] - 1.0), 0.0, 1e-14);
  EXPECT_LE(krylov.max_used(), 2);
}

TEST(Krylov, RejectsBadConfiguration) {
  EXPECT_THROW(KrylovPropagator(0), std::invalid_argument);
  EXPECT_THROW(KrylovPropagator(10, 1), std::invalid_argument);
}

TEST(DenseStep, MatchesOracle) {
  std::mt19937_64 rng(3);
  const Eigen::MatrixXd h = fc_hamiltonian(0.6, FullyConnectedModel(20.0, 30));
  const Eigen::VectorXcd start = random_state(h.rows(), rng);
  Eigen::VectorXcd psi = start;
  apply_dense_step(h, 0.7, psi);
  const Eigen::VectorXcd expected =
      testing::hermitian_expm(h.cast<std::complex<double>>(), 0.7) * start;
  EXPECT_LE((psi - expected).norm(), 1e-12);
}

}  // namespace
}  // namespace minact
