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

#pragma once

#include <Eigen/Dense>

#include "minact/models.hpp"

namespace minact {

/// Real traceless two-level generator H = z sz + x sx.
struct TwoLevelField {
  double z = 0.0;
  double x = 0.0;

  double splitting() const;
};

/// exp(-i H dt) in closed form.
Eigen::Matrix2cd two_level_propagator(TwoLevelField h, double dt);

/// psi <- exp(-i H dt) psi without forming the matrix.
void apply_two_level_step(TwoLevelField h, double dt, Eigen::Vector2cd& psi);

/// Short-iterative-Lanczos propagation for the banded real symmetric
/// generators of the bosonic model. The Krylov basis is fully
/// reorthogonalized and the small tridiagonal problem is exponentiated
/// through its eigendecomposition, so the result has the input norm to
/// rounding; the Krylov dimension grows until the residual estimate drops
/// below `tolerance`, after which the step is split in two if needed.
class KrylovPropagator {
 public:
  explicit KrylovPropagator(Eigen::Index dimension, int max_krylov = 40,
                            double tolerance = 1e-14);

  void step(const PentadiagonalMatrix& h, double dt, Eigen::VectorXcd& psi);

  /// Largest Krylov dimension used so far.
  int max_used() const { return max_used_; }

 private:
  bool try_step(const PentadiagonalMatrix& h, double dt, Eigen::VectorXcd& psi);

  int max_krylov_;
  double tolerance_;
  int max_used_ = 0;
  Eigen::MatrixXcd basis_;
  Eigen::VectorXcd work_;
  Eigen::VectorXd alpha_;
  Eigen::VectorXd beta_;
};

/// psi <- exp(-i H dt) psi through a full eigendecomposition of H.
void apply_dense_step(const Eigen::MatrixXd& h, double dt, Eigen::VectorXcd& psi);

}  // namespace minact
