// Copyright 2026 The dissq Authors
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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "dissq/states.hpp"
#include "dissq/types.hpp"

namespace dissq {

// Units throughout: hbar = 1, energies and rates in angular-frequency units.

/// Internal Hamiltonian plus M control Hamiltonians,
/// H(f) = H0 + sum_m f_m H_m.
class ControlSystem {
 public:
  /// Throws DimensionError on shape mismatch and std::invalid_argument when a
  /// matrix is not Hermitian within `tol`.
  ControlSystem(Matrix h0, std::vector<Matrix> controls,
                std::vector<std::string> labels = {}, double tol = 1e-12);

  Eigen::Index dim() const { return h0_.rows(); }
  std::size_t num_controls() const { return controls_.size(); }
  const Matrix& drift() const { return h0_; }
  const std::vector<Matrix>& controls() const { return controls_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Matrix h0_;
  std::vector<Matrix> controls_;
  std::vector<std::string> labels_;
};

// Throws DimensionError when f.size() != M.
Matrix total_hamiltonian(const ControlSystem& sys, std::span<const double> f);

/// Population relaxation and dephasing rates.
///
/// Index convention: gamma(n, k) is the rate of the transition |k> -> |n>,
/// so gamma(n, k) multiplies rho_kk in the gain term of d rho_nn / dt and
/// gamma(k, n) multiplies rho_nn in its loss term. For two levels,
/// gamma(0, 1) is the decay |2> -> |1> (written gamma_12) and gamma(1, 0)
/// is the excitation |1> -> |2> (gamma_21). dephasing(k, n) is the decay
/// rate of the coherence rho_kn.
class RateModel {
 public:
  /// Structural checks only: square, matching shapes, non-negative entries,
  /// zero diagonals, symmetric dephasing. Complete positivity is checked
  /// separately so that inconsistent models can still be diagnosed.
  RateModel(RealMatrix gamma, RealMatrix dephasing);

  static RateModel zero(Eigen::Index dim);
  // Two-level shorthand in the notation gamma_12 (|2>->|1>), gamma_21, Gamma.
  static RateModel two_level(double gamma_12, double gamma_21, double dephasing);
  /// Dephasing set to the floor implied by the decays,
  /// Gamma_kn = (out_k + out_n) / 2 + extra(k, n).
  static RateModel with_decay_induced_dephasing(const RealMatrix& gamma,
                                                const RealMatrix& extra = {});

  Eigen::Index dim() const { return gamma_.rows(); }
  const RealMatrix& gamma() const { return gamma_; }
  const RealMatrix& dephasing() const { return dephasing_; }
  // Total decay rate out of level n: sum_k gamma(k, n).
  double total_decay(Eigen::Index n) const;
  bool is_zero() const;

 private:
  RealMatrix gamma_;
  RealMatrix dephasing_;
};

/// Outcome of the complete-positivity test for a rate model.
///
/// The pairwise floor Gamma_kn >= (out_k + out_n) / 2 is the convention used
/// for N > 2 (for N = 2 it is exactly Gamma >= (gamma_12 + gamma_21) / 2).
/// Beyond the floor, the excess dephasing must itself be realizable by
/// diagonal Lindblad operators, which holds iff the centred Gram matrix
/// -J (2 Gamma~) J / 2 is positive semidefinite.
struct PositivityReport {
  double min_pair_margin = 0.0;  // min over pairs of Gamma~_kn
  double min_gram_eigenvalue = 0.0;
  bool completely_positive = false;
};

PositivityReport complete_positivity(const RateModel& model, double tol = 1e-12);
// Throws CompletePositivityError when the model fails complete_positivity.
void require_complete_positivity(const RateModel& model, double tol = 1e-12);

struct LindbladChannels {
  std::vector<Matrix> ops;
};

// D(rho) with D_nn = sum_k [gamma_nk rho_kk - gamma_kn rho_nn],
// D_kn = -Gamma_kn rho_kn.
Matrix dissipator_rates(const RateModel& model, const DensityMatrix& rho);

// 1/2 sum_s ([V_s rho, V_s^dag] + [V_s, rho V_s^dag])
Matrix dissipator_lindblad(const LindbladChannels& channels,
                           const DensityMatrix& rho);

/// Lindblad operators reproducing a rate model.
///
/// For two levels this is exactly V1 = sqrt(gamma_21)|2><1|,
/// V2 = sqrt(gamma_12)|1><2|, V3 = diag(sqrt(2 Gamma~), 0) with
/// Gamma~ = Gamma - (gamma_12 + gamma_21) / 2; all three are always returned.
/// For N > 2: one operator sqrt(gamma_nk)|n><k| per nonzero decay channel
/// plus diagonal dephasing operators recovered from the excess dephasing.
/// Throws CompletePositivityError when no such set exists.
LindbladChannels rates_to_lindblad(const RateModel& model, double tol = 1e-12);

struct TwoLevelSystem {
  double e1 = 0.0;
  double e2 = 1.0;
  double d1 = 1.0;
  double d2 = 1.0;
  double omega() const { return e2 - e1; }
};

// H0 = diag(E1, E2), H1 = d1 sigma_x, H2 = d2 sigma_y. Throws
// std::invalid_argument unless E1 < E2.
ControlSystem standard_two_level(const TwoLevelSystem& sys);

/// The same system in the frame rotating at `carrier`: H0 = diag(0, omega -
/// carrier). Control Hamiltonians are unchanged; a resonant carrier
/// A(t) cos(carrier t) on H1 becomes the static field A(t)/2 on H1.
ControlSystem rotating_frame_two_level(const TwoLevelSystem& sys, double carrier);

}  // namespace dissq
