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

#include <cstddef>

#include "dissq/types.hpp"

namespace dissq {

inline constexpr double kDefaultStateTolerance = 1e-9;

/// N x N complex matrix interpreted in the energy eigenbasis: diagonal
/// entries are populations, off-diagonal entries are coherences.
///
/// Construction only enforces squareness. Hermiticity, unit trace and
/// positivity are checked by validate() so that drifted or deliberately
/// invalid states can still be represented and diagnosed.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix diagonal(const RealVector& weights);
  static DensityMatrix maximally_mixed(Eigen::Index dim);
  // Projector onto basis state |level> (0-based).
  static DensityMatrix basis(Eigen::Index dim, Eigen::Index level);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const {
    return entries_(row, col);
  }

  RealVector populations() const { return entries_.diagonal().real(); }
  Complex trace() const { return entries_.trace(); }
  // Tr[rho^2], computed as the Frobenius sum so it stays real for
  // Hermitian inputs.
  double purity() const;

 private:
  Matrix entries_;
};

struct ValidationReport {
  double hermiticity_defect = 0.0;  // max |rho_nm - conj(rho_mn)|
  double trace_defect = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;      // of the Hermitian part
  double tolerance = 0.0;
  bool passed = false;
};

ValidationReport validate(const DensityMatrix& rho,
                          double tol = kDefaultStateTolerance);

// 1 - Tr[rho^2]
double purity_deficit(const DensityMatrix& rho);

// -log Tr[rho^2] (natural log). Always equals -log(1 - purity_deficit).
double renyi_entropy(const DensityMatrix& rho);

struct StateSpectrum {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // column k belongs to eigenvalues[k]
};

/// Hermitian eigendecomposition. Each eigenvector's largest-magnitude
/// component is rotated to be real and positive. Throws std::invalid_argument
/// when the Hermiticity defect exceeds `tol`.
StateSpectrum spectrum(const DensityMatrix& rho,
                       double tol = kDefaultStateTolerance);

// sum_n w_n |v_n><v_n|
DensityMatrix reconstruct(const StateSpectrum& s);

/// |psi><psi| for a normalized amplitude vector. Throws std::invalid_argument
/// when |sum |c_n|^2 - 1| > tol.
DensityMatrix from_statevector(const Vector& amplitudes,
                               double tol = kDefaultStateTolerance);

double hermiticity_defect(const Matrix& m);

}  // namespace dissq
