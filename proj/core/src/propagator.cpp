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

#include "minact/propagator.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace minact {

using namespace std::complex_literals;

double TwoLevelField::splitting() const { return 2.0 * std::hypot(z, x); }

Eigen::Matrix2cd two_level_propagator(TwoLevelField h, double dt) {
  const double norm = std::hypot(h.z, h.x);
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  if (norm == 0.0) return u;
  const double c = std::cos(norm * dt);
  const std::complex<double> s = -1.0i * std::sin(norm * dt) / norm;
  u(0, 0) = c + s * h.z;
  u(1, 1) = c - s * h.z;
  u(0, 1) = s * h.x;
  u(1, 0) = s * h.x;
  return u;
}

void apply_two_level_step(TwoLevelField h, double dt, Eigen::Vector2cd& psi) {
  const double norm = std::hypot(h.z, h.x);
  if (norm == 0.0) return;
  const double c = std::cos(norm * dt);
  const std::complex<double> s = -1.0i * std::sin(norm * dt) / norm;
  const std::complex<double> up = psi[0];
  const std::complex<double> down = psi[1];
  psi[0] = (c + s * h.z) * up + s * h.x * down;
  psi[1] = s * h.x * up + (c - s * h.z) * down;
}

KrylovPropagator::KrylovPropagator(Eigen::Index dimension, int max_krylov, double tolerance)
    : max_krylov_(static_cast<int>(std::min<Eigen::Index>(max_krylov, dimension))),
      tolerance_(tolerance),
      basis_(dimension, std::min<Eigen::Index>(max_krylov, dimension)),
      work_(dimension),
      alpha_(max_krylov_),
      beta_(max_krylov_) {
  if (dimension < 1 || max_krylov < 2) {
    throw std::invalid_argument("KrylovPropagator: invalid dimensions");
  }
}

void KrylovPropagator::step(const PentadiagonalMatrix& h, double dt, Eigen::VectorXcd& psi) {
  if (try_step(h, dt, psi)) return;
  step(h, dt / 2.0, psi);
  step(h, dt / 2.0, psi);
}

bool KrylovPropagator::try_step(const PentadiagonalMatrix& h, double dt,
                                Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) return true;
  const Eigen::Index n = psi.size();
  basis_.col(0) = psi / norm;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small;
  Eigen::VectorXcd coeffs;
  for (int j = 0; j < max_krylov_; ++j) {
    h.apply(basis_.col(j), work_);
    alpha_[j] = basis_.col(j).dot(work_).real();
    // Full reorthogonalization against the current basis.
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXcd overlaps = basis_.leftCols(j + 1).adjoint() * work_;
      work_.noalias() -= basis_.leftCols(j + 1) * overlaps;
    }
    const double next = work_.norm();

    small.computeFromTridiagonal(alpha_.head(j + 1), beta_.head(j),
                                 Eigen::ComputeEigenvectors);
    const Eigen::MatrixXd& q = small.eigenvectors();
    const Eigen::VectorXcd phases =
        (small.eigenvalues().cast<std::complex<double>>() * (-1.0i * dt)).array().exp();
    coeffs = q * (phases.array() * q.row(0).transpose().cast<std::complex<double>>().array())
                     .matrix();

    const bool exhausted = j + 1 == n || next <= 1e-14 * (std::abs(alpha_[j]) + 1.0);
    if (exhausted || next * std::abs(coeffs[j]) < tolerance_) {
      // coeffs is a unit vector and the basis is orthonormal, so the norm is kept.
      psi = norm * (basis_.leftCols(j + 1) * coeffs);
      max_used_ = std::max(max_used_, j + 1);
      return true;
    }
    if (j + 1 == max_krylov_) return false;
    beta_[j] = next;
    basis_.col(j + 1) = work_ / next;
  }
  return false;
}

void apply_dense_step(const Eigen::MatrixXd& h, double dt, Eigen::VectorXcd& psi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  const Eigen::MatrixXd& v = solver.eigenvectors();
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<std::complex<double>>() * (-1.0i * dt)).array().exp();
  const Eigen::VectorXcd projected = v.transpose().cast<std::complex<double>>() * psi;
  psi = v.cast<std::complex<double>>() * (phases.array() * projected.array()).matrix();
}

}  // namespace minact
