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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "minact/errors.hpp"
#include "minact/linalg.hpp"
#include "minact/models.hpp"
#include "support/oracles.hpp"

namespace minact {
namespace {

using std::numbers::pi;

double splitting(const Eigen::Matrix2cd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
  return solver.eigenvalues()[1] - solver.eigenvalues()[0];
}

TEST(LandauZener, HamiltonianExamples) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(lz_hamiltonian(0.0, 1.0));
  EXPECT_NEAR(solver.eigenvalues()[0], -1.0, 1e-15);
  EXPECT_NEAR(solver.eigenvalues()[1], 1.0, 1e-15);
  EXPECT_NEAR(splitting(lz_hamiltonian(10.0, 1.0)), 2 * std::sqrt(101.0), 1e-12);
  EXPECT_NEAR(lz_hamiltonian(0.3, 2.0).trace().real(), 0.0, 0.0);
  EXPECT_THROW(lz_hamiltonian(0.0, 0.0), std::invalid_argument);
}

TEST(LandauZener, DriveNormIsTwo) {
  const Eigen::Matrix2cd dh = lz_hamiltonian(1.0, 0.7) - lz_hamiltonian(0.0, 0.7);
  EXPECT_NEAR(dh.squaredNorm(), 2.0, 1e-15);
}

TEST(LandauZener, GapExamples) {
  EXPECT_DOUBLE_EQ(lz_gap(0.0, 1.0), 2.0);
  EXPECT_NEAR(lz_gap(-10.0, 1.0), 2 * std::sqrt(101.0), 1e-13);
  EXPECT_THROW(lz_gap(1.0, -1.0), std::invalid_argument);
}

TEST(GapConsistency, LzAndMomentumModesMatchEigensplitting) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> g(-20.0, 20.0);
  std::uniform_real_distribution<double> positive(0.05, 5.0);
  std::uniform_int_distribution<int> half_sites(2, 30);
  for (int i = 0; i < 1000; ++i) {
    const double gv = g(rng);
    const double delta = positive(rng);
    const double lz = lz_gap(gv, delta);
    ASSERT_NEAR(splitting(lz_hamiltonian(gv, delta)), lz, 1e-12 * lz);

    const IsingChain chain(2 * half_sites(rng), positive(rng));
    const auto modes = tfim_subspaces(chain);
    const auto& mode = modes[static_cast<std::size_t>(i) % modes.size()];
    const double gap = subspace_gap(mode.k, gv / 4, mode.omega);
    ASSERT_NEAR(splitting(subspace_hamiltonian(mode.k, gv / 4, mode.omega)), gap,
                1e-12 * std::max(1.0, gap));
  }
}

TEST(IsingChain, Preconditions) {
  EXPECT_THROW(IsingChain(7), std::invalid_argument);
  EXPECT_THROW(IsingChain(2), std::invalid_argument);
  EXPECT_THROW(IsingChain(8, 0.0), std::invalid_argument);
}

TEST(TfimSubspaces, MomentumValues) {
  const auto four = tfim_subspaces(IsingChain(4));
  ASSERT_EQ(four.size(), 2u);
  EXPECT_DOUBLE_EQ(four[0].k, pi / 4);
  EXPECT_DOUBLE_EQ(four[1].k, 3 * pi / 4);

  const auto twenty = tfim_subspaces(IsingChain(20));
  ASSERT_EQ(twenty.size(), 10u);
  EXPECT_DOUBLE_EQ(twenty[0].k, pi / 20);

  for (int n = 4; n <= 60; n += 2) {
    EXPECT_EQ(tfim_subspaces(IsingChain(n)).size(), static_cast<std::size_t>(n / 2));
  }
}

TEST(SubspaceHamiltonian, Examples) {
  EXPECT_NEAR(splitting(subspace_hamiltonian(pi / 20, 1.0, 1.0)), 0.627672765822759560, 1e-12);
  EXPECT_NEAR(subspace_gap(pi / 20, 1.0, 1.0), 8 * std::sin(pi / 40), 1e-14);
  EXPECT_NEAR(splitting(subspace_hamiltonian(pi / 2, 0.0, 1.0)), 4.0, 1e-14);
}

TEST(SubspaceHamiltonian, GapMinimumSitsAtCosK) {
  for (double k : {pi / 20, pi / 6, 3 * pi / 8}) {
    double best = std::numeric_limits<double>::infinity();
    double at = 0.0;
    for (int i = 0; i <= 200000; ++i) {
      const double g = 2.0 * i / 200000.0;
      const double gap = splitting(subspace_hamiltonian(k, g, 1.0));
      if (gap < best) {
        best = gap;
        at = g;
      }
    }
    EXPECT_NEAR(at, std::cos(k), 1e-5);
    EXPECT_NEAR(best, 4 * std::sin(k), 1e-9);
  }
}

TEST(Hermiticity, AllModelHamiltonians) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const FullyConnectedModel fc(50.0, 40);
  for (int i = 0; i < 100; ++i) {
    const double g = u(rng);
    EXPECT_LE(hermiticity_defect(lz_hamiltonian(20 * g - 10, 1 + g)), 1e-14);
    EXPECT_LE(hermiticity_defect(subspace_hamiltonian(pi * g, 2 * g, 1.0)), 1e-14);
    EXPECT_LE(hermiticity_defect(fc_hamiltonian(g, fc).cast<std::complex<double>>()), 1e-14);
  }
}

// Full Fock space (both parities) built from padded ladder matrices.
Eigen::MatrixXd full_fock_hamiltonian(double g, double eta, int levels) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXd x = a + a.transpose();
  const Eigen::MatrixXd x2 = x * x;
  return a.transpose() * a - (g * g / 4) * x2 + (g * g * g * g / (16 * eta)) * (x2 * x2);
}

TEST(FullyConnected, EvenSectorMatchesLadderConstruction) {
  const int n_max = 30;
  const FullyConnectedModel model(10.0, n_max);
  for (double g : {0.0, 0.4, 0.9}) {
    const Eigen::MatrixXd full = full_fock_hamiltonian(g, 10.0, n_max + 10);
    const Eigen::MatrixXd ours = fc_hamiltonian(g, model);
    for (int i = 0; i <= n_max / 2; ++i) {
      for (int j = 0; j <= n_max / 2; ++j) {
        ASSERT_NEAR(ours(i, j), full(2 * i, 2 * j), 1e-10) << i << "," << j;
      }
    }
    // Parity: no matrix element couples even and odd occupations.
    for (int i = 0; i < n_max; ++i) {
      for (int j = 0; j < n_max; ++j) {
        if ((i + j) % 2 == 1) ASSERT_EQ(full(i, j), 0.0);
      }
    }
  }
}

TEST(FullyConnected, BandStructure) {
  const Eigen::MatrixXd h = fc_hamiltonian(0.7, FullyConnectedModel(100.0, 40));
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (std::abs(i - j) > 2) ASSERT_EQ(h(i, j), 0.0);
    }
  }
  EXPECT_NE(h(0, 2), 0.0);
}

TEST(FullyConnected, HarmonicLimit) {
  const FullyConnectedModel model(100.0, 20);
  const Eigenpair gs = ground_state(fc_hamiltonian(0.0, model));
  EXPECT_NEAR(gs.energy, 0.0, 1e-14);
  EXPECT_NEAR(std::abs(gs.state[0]), 1.0, 1e-14);
  EXPECT_NEAR(gs.gap, 2.0, 1e-14);
}

TEST(FullyConnected, TruncationConverged) {
  const double e160 = ground_state(fc_hamiltonian(0.9, FullyConnectedModel(100.0, 160))).energy;
  const double e240 = ground_state(fc_hamiltonian(0.9, FullyConnectedModel(100.0, 240))).energy;
  EXPECT_LT(std::abs(e160 - e240), 1e-10);
  EXPECT_LT(FullyConnectedModel(100.0, 160).top_level_population(0.9), 1e-10);
}

TEST(FullyConnected, AutoTruncationDoublesUntilConverged) {
  EXPECT_EQ(FullyConnectedModel::with_converged_truncation(100.0, 0.1, 0.9).n_max(), 160);
  // A tiny starting basis cannot hold the squeezed ground state at g = 0.9.
  const auto grown = FullyConnectedModel::with_converged_truncation(100.0, 0.1, 0.9, 1.0, 8);
  EXPECT_GT(grown.n_max(), 8);
  EXPECT_LT(grown.top_level_population(0.9), 1e-10);
  EXPECT_THROW(FullyConnectedModel::with_converged_truncation(100.0, 0.1, 0.9, 1.0, 4, 8),
               NumericalError);
}

TEST(FullyConnected, ExactGapApproachesThermodynamicGapWithSize) {
  auto mean_deviation = [](double eta) {
    const FullyConnectedModel model(eta, 160);
    double acc = 0.0;
    int count = 0;
    for (double g = 0.1; g <= 0.9 + 1e-12; g += 0.05, ++count) {
      acc += std::abs(model.exact_gap(g) - model.thermodynamic_gap(g));
    }
    return acc / count;
  };
  EXPECT_LT(mean_deviation(100.0), mean_deviation(10.0));
  EXPECT_LT(mean_deviation(1000.0), mean_deviation(100.0));
}

TEST(FullyConnected, Preconditions) {
  EXPECT_THROW(FullyConnectedModel(0.0), std::invalid_argument);
  EXPECT_THROW(FullyConnectedModel(10.0, 41), std::invalid_argument);
}

TEST(GroundState, SigmaX) {
  const Eigenpair gs = ground_state(Eigen::MatrixXcd(lz_hamiltonian(0.0, 1.0)));
  EXPECT_NEAR(gs.energy, -1.0, 1e-15);
  Eigen::Vector2cd expected(1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
  EXPECT_NEAR(std::norm(gs.state.dot(expected)), 1.0, 1e-14);
  EXPECT_FALSE(gs.degenerate);
}

TEST(GroundState, RandomHermitianResidualAndPhase) {
  std::mt19937_64 rng(123);
  for (int n : {2, 3, 8, 40}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::MatrixXcd h = testing::random_hermitian(n, rng);
      const Eigenpair gs = ground_state(h);
      EXPECT_LE((h * gs.state - gs.energy * gs.state).norm(), 1e-10);
      EXPECT_NEAR(gs.state.norm(), 1.0, 1e-14);
      Eigen::Index imax = 0;
      gs.state.cwiseAbs().maxCoeff(&imax);
      EXPECT_EQ(gs.state[imax].imag(), 0.0);
      EXPECT_GT(gs.state[imax].real(), 0.0);
    }
  }
}

TEST(GroundState, FlagsDegeneracy) {
  EXPECT_TRUE(ground_state(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(3, 3))).degenerate);
  EXPECT_THROW(ground_state(Eigen::MatrixXcd(0, 0)), std::invalid_argument);
}

TEST(Timescales, Examples) {
  EXPECT_DOUBLE_EQ(timescales(LandauZener{1.0}).tau_a, 1.0);
  EXPECT_FALSE(timescales(LandauZener{1.0}).tau_l.has_value());
  const Timescales ising = timescales(IsingChain(20));
  EXPECT_NEAR(ising.tau_a, 1.59811330537491539, 1e-14);
  ASSERT_TRUE(ising.tau_l.has_value());
  EXPECT_DOUBLE_EQ(*ising.tau_l, 5.0);
  const Timescales fc = timescales(FullyConnectedModel(100.0), 0.9);
  EXPECT_NEAR(fc.tau_a, 1.58113883008418967, 1e-14);
  EXPECT_FALSE(fc.tau_l.has_value());
}

}  // namespace
}  // namespace minact
