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
#include <utility>
#include <vector>

#include "dissq/dynamics.hpp"
#include "dissq/states.hpp"

namespace dissq {

// Row-major flattening [rho_11, rho_12, ..., rho_1N, rho_21, ..., rho_NN].
// With this ordering vec(A X B) = (A kron B^T) vec(X).
Vector vectorize(const DensityMatrix& rho);
Vector vectorize(const Matrix& m);
DensityMatrix devectorize(const Vector& v);
inline Eigen::Index liouville_index(Eigen::Index row, Eigen::Index col, Eigen::Index dim) {
  return row * dim + col;
}

/// Superoperator decomposition of the dissipative Liouville equation
///
///   d|rho>/dt = -i [L0 + sum_m f_m L_m + i LD] |rho>
///
/// with L0|rho> = vec([H0, rho]), L_m|rho> = vec([H_m, rho]) and
/// LD|rho> = vec(D(rho)).
struct Liouvillian {
  Eigen::Index dim = 0;
  Matrix drift;
  std::vector<Matrix> controls;
  Matrix dissipation;

  std::size_t num_controls() const { return controls.size(); }
  // Full generator G(f) = -i (L0 + sum f_m L_m) + LD.
  Matrix generator(std::span<const double> f) const;
};

// vec([H, .]) as an N^2 x N^2 matrix.
Matrix commutator_superoperator(const Matrix& h);
// Dissipator of a rate model, element by element:
// (LD)_{kn,kn} = -Gamma_kn, (LD)_{nn,kk} = gamma_nk, (LD)_{nn,nn} = -sum_k gamma_kn.
Matrix rate_superoperator(const RateModel& model);
Matrix lindblad_superoperator(const LindbladChannels& channels, Eigen::Index dim);

Liouvillian build_liouvillian(const ControlSystem& sys, const RateModel& model);
Liouvillian build_liouvillian(const ControlSystem& sys, const LindbladChannels& channels);

struct DisjointnessReport {
  bool disjoint = true;
  // (row, col) positions where some L_m and LD are both nonzero.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> overlapping_entries;
};

DisjointnessReport support_disjointness(const Liouvillian& l, double tol = 1e-12);

/// min over real f of || sum_m f_m L_m|rho> + i LD|rho> ||_2, i.e. how far the
/// best instantaneous choice of control fields is from cancelling the
/// dissipative term for this state. Zero when there are no controls and LD
/// annihilates rho.
double cancellation_residual(const Liouvillian& l, const DensityMatrix& rho);

}  // namespace dissq
