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

#include "minact/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "minact/errors.hpp"

namespace minact {

using std::numbers::pi;

Eigen::Matrix2cd lz_hamiltonian(double g, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("lz_hamiltonian: delta must be positive");
  Eigen::Matrix2cd h;
  h << g, delta, delta, -g;
  return h;
}

double lz_gap(double g, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("lz_gap: delta must be positive");
  return 2.0 * std::hypot(g, delta);
}

IsingChain::IsingChain(int sites, double omega) : sites_(sites), omega_(omega) {
  if (sites < 4 || sites % 2 != 0) {
    throw std::invalid_argument("IsingChain: N must be even and >= 4");
  }
  if (!(omega > 0.0)) throw std::invalid_argument("IsingChain: omega must be positive");
}

std::vector<MomentumMode> tfim_subspaces(const IsingChain& chain) {
  const int n_modes = chain.sites() / 2;
  std::vector<MomentumMode> modes;
  modes.reserve(static_cast<std::size_t>(n_modes));
  for (int n = 1; n <= n_modes; ++n) {
    modes.push_back({(2.0 * n - 1.0) * pi / chain.sites(), chain.omega()});
  }
  return modes;
}

Eigen::Matrix2cd subspace_hamiltonian(double k, double g, double omega) {
  const double z = 2.0 * omega * (g - std::cos(k));
  const double x = 2.0 * omega * std::sin(k);
  Eigen::Matrix2cd h;
  h << z, x, x, -z;
  return h;
}

double subspace_gap(double k, double g, double omega) {
  return 4.0 * omega * std::sqrt(g * g - 2.0 * g * std::cos(k) + 1.0);
}

Eigen::MatrixXd PentadiagonalMatrix::dense() const {
  const Eigen::Index n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = d0[i];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = d1[i];
    if (i + 2 < n) m(i, i + 2) = m(i + 2, i) = d2[i];
  }
  return m;
}

void PentadiagonalMatrix::apply(const Eigen::Ref<const Eigen::VectorXcd>& x,
                                Eigen::Ref<Eigen::VectorXcd> y) const {
  const Eigen::Index n = size();
  for (Eigen::Index i = 0; i < n; ++i) {
    std::complex<double> acc = d0[i] * x[i];
    if (i + 1 < n) acc += d1[i] * x[i + 1];
    if (i + 2 < n) acc += d2[i] * x[i + 2];
    if (i >= 1) acc += d1[i - 1] * x[i - 1];
    if (i >= 2) acc += d2[i - 2] * x[i - 2];
    y[i] = acc;
  }
}

namespace {

// <n|(a + a')^2|m> without truncation.
double x2_element(long n, long m) {
  if (n < 0 || m < 0) return 0.0;
  if (n == m) return 2.0 * n + 1.0;
  const long lo = std::min(n, m);
  if (std::abs(n - m) == 2) return std::sqrt(static_cast<double>((lo + 1) * (lo + 2)));
  return 0.0;
}

// <n|(a + a')^4|m>, summing over the intermediate levels reachable by x2.
double x4_element(long n, long m) {
  double acc = 0.0;
  for (long k = n - 2; k <= n + 2; k += 2) acc += x2_element(n, k) * x2_element(k, m);
  return acc;
}

PentadiagonalMatrix even_sector(Eigen::Index dim, double (*element)(long, long)) {
  PentadiagonalMatrix m;
  m.d0.resize(dim);
  m.d1.resize(std::max<Eigen::Index>(dim - 1, 0));
  m.d2.resize(std::max<Eigen::Index>(dim - 2, 0));
  for (Eigen::Index i = 0; i < dim; ++i) {
    const long n = 2 * static_cast<long>(i);
    m.d0[i] = element(n, n);
    if (i + 1 < dim) m.d1[i] = element(n, n + 2);
    if (i + 2 < dim) m.d2[i] = element(n, n + 4);
  }
  return m;
}

double number_element(long n, long m) { return n == m ? static_cast<double>(n) : 0.0; }

}  // namespace

FullyConnectedModel::FullyConnectedModel(double eta, int n_max, double omega)
    : eta_(eta), omega_(omega), n_max_(n_max) {
  if (!(eta > 0.0)) throw std::invalid_argument("FullyConnectedModel: eta must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("FullyConnectedModel: omega must be positive");
  if (n_max < 4 || n_max % 2 != 0) {
    throw std::invalid_argument("FullyConnectedModel: n_max must be even and >= 4");
  }
  number_ = even_sector(dimension(), number_element);
  x2_ = even_sector(dimension(), x2_element);
  x4_ = even_sector(dimension(), x4_element);
}

FullyConnectedModel FullyConnectedModel::with_converged_truncation(
    double eta, double g_lo, double g_hi, double omega, int n_max_start,
    int n_max_limit) {
  constexpr int kSamples = 33;
  constexpr double kThreshold = 1e-10;
  double worst = 0.0;
  for (int n_max = n_max_start; n_max <= n_max_limit; n_max *= 2) {
    FullyConnectedModel model(eta, n_max, omega);
    worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const double g = g_lo + (g_hi - g_lo) * i / (kSamples - 1);
      worst = std::max(worst, model.top_level_population(g));
    }
    if (worst < kThreshold) return model;
  }
  std::ostringstream msg;
  msg << "FullyConnectedModel: truncation not converged up to n_max = " << n_max_limit
      << " (top-level population " << worst << ")";
  throw NumericalError(msg.str(), worst);
}

PentadiagonalMatrix FullyConnectedModel::hamiltonian(double g) const {
  const double g2 = g * g;
  const double quadratic = -omega_ * g2 / 4.0;
  const double quartic = omega_ * g2 * g2 / (16.0 * eta_);
  PentadiagonalMatrix h;
  h.d0 = omega_ * number_.d0 + quadratic * x2_.d0 + quartic * x4_.d0;
  h.d1 = omega_ * number_.d1 + quadratic * x2_.d1 + quartic * x4_.d1;
  h.d2 = omega_ * number_.d2 + quadratic * x2_.d2 + quartic * x4_.d2;
  return h;
}

double FullyConnectedModel::thermodynamic_gap(double g) const {
  return 2.0 * omega_ * std::sqrt(std::max(0.0, 1.0 - g * g));
}

double FullyConnectedModel::exact_gap(double g) const {
  return ground_state(hamiltonian(g).dense()).gap;
}

double FullyConnectedModel::top_level_population(double g) const {
  const Eigenpair gs = ground_state(hamiltonian(g).dense());
  return gs.state.tail(2).squaredNorm();
}

Eigen::MatrixXd fc_hamiltonian(double g, const FullyConnectedModel& model) {
  return model.hamiltonian(g).dense();
}

std::string_view model_name(const ModelSystem& model) {
  struct Visitor {
    std::string_view operator()(const LandauZener&) const { return "lz"; }
    std::string_view operator()(const IsingChain&) const { return "ising"; }
    std::string_view operator()(const FullyConnectedModel&) const { return "fc"; }
  };
  return std::visit(Visitor{}, model);
}

Timescales timescales(const ModelSystem& model, double g_max) {
  struct Visitor {
    double g_max;
    Timescales operator()(const LandauZener& lz) const { return {1.0 / lz.delta, {}}; }
    Timescales operator()(const IsingChain& chain) const {
      const double n = chain.sites();
      return {1.0 / (4.0 * chain.omega() * std::sin(pi / n)), n / (4.0 * chain.omega())};
    }
    Timescales operator()(const FullyConnectedModel& fc) const {
      if (!(g_max < 1.0)) throw std::invalid_argument("timescales: fc requires g_max < 1");
      return {1.0 / (2.0 * fc.omega() * std::sqrt(1.0 - g_max)), {}};
    }
  };
  return std::visit(Visitor{g_max}, model);
}

}  // namespace minact
