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

#include <benchmark/benchmark.h>

#include "minact/action.hpp"
#include "minact/dynamics.hpp"
#include "minact/models.hpp"
#include "minact/propagator.hpp"
#include "minact/ramp.hpp"

namespace {

using namespace minact;

void BM_TwoLevelStep(benchmark::State& state) {
  Eigen::Vector2cd psi(1.0, 0.0);
  double z = -10.0;
  for (auto _ : state) {
    apply_two_level_step({z, 1.0}, 1e-3, psi);
    z += 1e-7;
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_TwoLevelStep);

void BM_KrylovStep(benchmark::State& state) {
  const FullyConnectedModel model(100.0, static_cast<int>(state.range(0)));
  const PentadiagonalMatrix h = model.hamiltonian(0.8);
  Eigen::VectorXcd psi = ground_state(model.hamiltonian(0.7).dense()).state;
  KrylovPropagator krylov(model.dimension());
  for (auto _ : state) {
    krylov.step(h, 0.01, psi);
    benchmark::DoNotOptimize(psi.data());
  }
}
BENCHMARK(BM_KrylovStep)->Arg(160)->Arg(320);

void BM_DenseStep(benchmark::State& state) {
  const FullyConnectedModel model(100.0, 160);
  const Eigen::MatrixXd h = fc_hamiltonian(0.8, model);
  Eigen::VectorXcd psi = ground_state(model.hamiltonian(0.7).dense()).state;
  for (auto _ : state) {
    apply_dense_step(h, 0.01, psi);
    benchmark::DoNotOptimize(psi.data());
  }
}
BENCHMARK(BM_DenseStep);

void BM_SolveEulerLagrange(benchmark::State& state) {
  const ActionModel model = ising_action_model(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_euler_lagrange(model, 0.0, 2.0, 2001));
  }
}
BENCHMARK(BM_SolveEulerLagrange)->Unit(benchmark::kMillisecond);

void BM_EvaluateAction(benchmark::State& state) {
  const ActionModel model = fc_action_model();
  const RampProfile ramp = fc_optimal_ramp(0.1, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_action(model, ramp, 1.0));
}
BENCHMARK(BM_EvaluateAction);

void BM_EvolveIsing(benchmark::State& state) {
  const IsingChain chain(static_cast<int>(state.range(0)));
  const RampProfile ramp = ising_optimal_ramp(0.0, chain.sites());
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(chain, ramp, chain.sites() / 4.0).fidelity);
  }
}
BENCHMARK(BM_EvolveIsing)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
