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

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "minact/linalg.hpp"

namespace minact {

// ---------------------------------------------------------------------------
// Landau-Zener
// ---------------------------------------------------------------------------

struct LandauZener {
  double delta = 1.0;
};

/// H = delta sx + g sz.
Eigen::Matrix2cd lz_hamiltonian(double g, double delta);

/// 2 sqrt(g^2 + delta^2).
double lz_gap(double g, double delta);

// ---------------------------------------------------------------------------
// Transverse-field Ising chain in momentum space
// ---------------------------------------------------------------------------

/// Periodic chain of an even number of sites, H = -omega sum(g sx_i + sz_i sz_{i+1}).
class IsingChain {
 public:
  explicit IsingChain(int sites, double omega = 1.0);

  int sites() const { return sites_; }
  double omega() const { return omega_; }

 private:
  int sites_;
  double omega_;
};

struct MomentumMode {
  double k = 0.0;
  double omega = 1.0;
};

/// k_n = (2n - 1) pi / N for n = 1..N/2, lowest momentum first.
std::vector<MomentumMode> tfim_subspaces(const IsingChain& chain);

/// Pair-basis block 2 omega [(g - cos k) sz + sin k sx].
Eigen::Matrix2cd subspace_hamiltonian(double k, double g, double omega);

/// 4 omega sqrt(g^2 - 2 g cos k + 1).
double subspace_gap(double k, double g, double omega);

// ---------------------------------------------------------------------------
// Fully connected (single-mode bosonic) model
// ---------------------------------------------------------------------------

/// Real symmetric matrix stored by its main and first two super-diagonals.
/// The even-parity Fock representation of the fully connected model has
/// exactly this shape.
struct PentadiagonalMatrix {
  Eigen::VectorXd d0;
  Eigen::VectorXd d1;
  Eigen::VectorXd d2;

  Eigen::Index size() const { return d0.size(); }
  Eigen::MatrixXd dense() const;
  void apply(const Eigen::Ref<const Eigen::VectorXcd>& x,
             Eigen::Ref<Eigen::VectorXcd> y) const;
};

/// H = omega a'a - (omega g^2 / 4)(a + a')^2 + (omega g^4 / 16 eta)(a + a')^4
/// on the even-parity Fock states |0>, |2>, ..., |n_max>.
class FullyConnectedModel {
 public:
  FullyConnectedModel(double eta, int n_max = 160, double omega = 1.0);

  /// Smallest n_max >= n_max_start (doubling) for which the ground state
  /// keeps less than 1e-10 of its weight on the top two retained levels for
  /// every g in [g_lo, g_hi]. Throws NumericalError past n_max_limit.
  static FullyConnectedModel with_converged_truncation(
      double eta, double g_lo, double g_hi, double omega = 1.0,
      int n_max_start = 160, int n_max_limit = 2560);

  double eta() const { return eta_; }
  double omega() const { return omega_; }
  int n_max() const { return n_max_; }
  Eigen::Index dimension() const { return n_max_ / 2 + 1; }

  PentadiagonalMatrix hamiltonian(double g) const;

  /// Gap of the eta -> infinity limit, 2 omega sqrt(1 - g^2).
  double thermodynamic_gap(double g) const;

  /// Splitting of the two lowest even-sector levels of the truncated matrix.
  double exact_gap(double g) const;

  /// Ground-state weight on the two highest retained Fock levels.
  double top_level_population(double g) const;

 private:
  double eta_;
  double omega_;
  int n_max_;
  // Even-sector restrictions of a'a, (a + a')^2 and (a + a')^4, built from
  // ladder operators on a basis padded past n_max so that the retained
  // entries are exact.
  PentadiagonalMatrix number_;
  PentadiagonalMatrix x2_;
  PentadiagonalMatrix x4_;
};

/// Dense form of FullyConnectedModel::hamiltonian.
Eigen::MatrixXd fc_hamiltonian(double g, const FullyConnectedModel& model);

// ---------------------------------------------------------------------------
// Model selection
// ---------------------------------------------------------------------------

using ModelSystem = std::variant<LandauZener, IsingChain, FullyConnectedModel>;

std::string_view model_name(const ModelSystem& model);

struct Timescales {
  double tau_a = 0.0;
  /// Locality timescale N / (4 omega), Ising chain only.
  std::optional<double> tau_l;
};

/// Characteristic durations. g_max is the largest control value reached,
/// used only by the fully connected model.
Timescales timescales(const ModelSystem& model, double g_max = 0.0);

}  // namespace minact
