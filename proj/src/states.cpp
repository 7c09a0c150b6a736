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

#include "dissq/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

namespace dissq {

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw DimensionError("density matrix must be square and non-empty");
  }
}

DensityMatrix DensityMatrix::diagonal(const RealVector& weights) {
  return DensityMatrix(weights.cast<Complex>().asDiagonal());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis(Eigen::Index dim, Eigen::Index level) {
  if (level < 0 || level >= dim) {
    throw DimensionError("basis level out of range");
  }
  Matrix m = Matrix::Zero(dim, dim);
  m(level, level) = 1.0;
  return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const {
  // Tr[rho rho] = sum_nm rho_nm rho_mn; for Hermitian rho this is the
  // squared Frobenius norm.
  return (entries_.cwiseProduct(entries_.transpose())).sum().real();
}

double hermiticity_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ValidationReport validate(const DensityMatrix& rho, double tol) {
  ValidationReport r;
  r.tolerance = tol;
  r.hermiticity_defect = hermiticity_defect(rho.entries());
  r.trace_defect = std::abs(rho.trace() - 1.0);
  const Matrix herm = 0.5 * (rho.entries() + rho.entries().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.passed = r.hermiticity_defect <= tol && r.trace_defect <= tol &&
             r.min_eigenvalue >= -tol;
  return r;
}

double purity_deficit(const DensityMatrix& rho) { return 1.0 - rho.purity(); }

double renyi_entropy(const DensityMatrix& rho) {
  return -std::log(1.0 - purity_deficit(rho));
}

StateSpectrum spectrum(const DensityMatrix& rho, double tol) {
  const double defect = hermiticity_defect(rho.entries());
  if (defect > tol) {
    throw std::invalid_argument("spectrum: input is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  const Eigen::Index n = rho.dim();
  const Matrix herm = 0.5 * (rho.entries() + rho.entries().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  if (es.info() != Eigen::Success) {
    throw std::invalid_argument("spectrum: eigendecomposition failed");
  }

  // Eigen sorts ascending.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return es.eigenvalues()(a) > es.eigenvalues()(b);
  });

  StateSpectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    s.eigenvalues(k) = es.eigenvalues()(src);
    Vector v = es.eigenvectors().col(src);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    const Complex phase = std::conj(v(pivot)) / std::abs(v(pivot));
    s.eigenvectors.col(k) = v * phase;
  }
  return s;
}

DensityMatrix reconstruct(const StateSpectrum& s) {
  const Matrix m = s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() *
                   s.eigenvectors.adjoint();
  return DensityMatrix(m);
}

DensityMatrix from_statevector(const Vector& amplitudes, double tol) {
  if (amplitudes.size() == 0) {
    throw std::invalid_argument("from_statevector: empty amplitude vector");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol) {
    throw std::invalid_argument("from_statevector: amplitudes not normalized (|c|^2 = " +
                                std::to_string(norm2) + ")");
  }
  return DensityMatrix(amplitudes * amplitudes.adjoint());
}

}  // namespace dissq
