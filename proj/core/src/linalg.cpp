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

#include "minact/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace minact {

void fix_phase(StateVector& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs2().maxCoeff(&imax);
  const std::complex<double> pivot = v[imax];
  if (std::abs(pivot) == 0.0) return;
  v *= std::conj(pivot) / std::abs(pivot);
  v[imax] = std::abs(v[imax]);
}

namespace {

template <typename Matrix>
Eigenpair lowest(const Matrix& h) {
  if (h.rows() == 0 || h.rows() != h.cols()) {
    throw std::invalid_argument("ground_state: matrix must be square and non-empty");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("ground_state: eigensolver failed");
  }
  const auto& values = solver.eigenvalues();
  Eigenpair out;
  out.energy = values[0];
  out.state = solver.eigenvectors().col(0).template cast<std::complex<double>>();
  out.state.normalize();
  fix_phase(out.state);
  if (values.size() > 1) {
    out.gap = values[1] - values[0];
    out.degenerate = out.gap <= 1e-12 * std::max(1.0, std::abs(values[0]));
  }
  return out;
}

}  // namespace

Eigenpair ground_state(const ComplexMatrix& h) { return lowest(h); }

Eigenpair ground_state(const Eigen::MatrixXd& h) { return lowest(h); }

double hermiticity_defect(const ComplexMatrix& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace minact
