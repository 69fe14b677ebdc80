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

namespace minact {

using StateVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

struct Eigenpair {
  double energy = 0.0;
  StateVector state;
  /// Distance to the next eigenvalue (0 for one-dimensional input).
  double gap = 0.0;
  /// Set when the two lowest eigenvalues agree to within 1e-12.
  bool degenerate = false;
};

/// Lowest eigenpair of a Hermitian matrix. The eigenvector is normalized and
/// its largest-magnitude amplitude is made real and positive. Only the lower
/// triangle is read.
Eigenpair ground_state(const ComplexMatrix& h);
Eigenpair ground_state(const Eigen::MatrixXd& h);

/// Rotate v so that its largest-magnitude component is real positive.
void fix_phase(StateVector& v);

/// max |h - h^dagger| entrywise.
double hermiticity_defect(const ComplexMatrix& h);

}  // namespace minact
