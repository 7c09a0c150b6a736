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

#include "dissq/random.hpp"

namespace dissq {

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix g(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  }
  return g;
}

}  // namespace

DensityMatrix random_density_matrix(Eigen::Index dim, Rng& rng) {
  const Matrix a = ginibre(dim, dim, rng);
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

DensityMatrix random_pure_state(Eigen::Index dim, Rng& rng) {
  Vector v = ginibre(dim, 1, rng).col(0);
  v.normalize();
  return DensityMatrix(v * v.adjoint());
}

Matrix random_hermitian(Eigen::Index dim, Rng& rng, double scale) {
  const Matrix g = ginibre(dim, dim, rng) * scale;
  return 0.5 * (g + g.adjoint());
}

RateModel random_cp_rate_model(Eigen::Index dim, Rng& rng, double max_rate) {
  std::uniform_real_distribution<double> uniform(0.0, max_rate);
  RealMatrix gamma = RealMatrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (n != k) gamma(n, k) = uniform(rng);
    }
  }
  // Pure dephasing from two random diagonal operators a_s:
  // extra_kn = sum_s |a_sk - a_sn|^2 / 2.
  std::normal_distribution<double> normal(0.0, std::sqrt(max_rate));
  RealMatrix extra = RealMatrix::Zero(dim, dim);
  for (int s = 0; s < 2; ++s) {
    RealVector a(dim);
    for (Eigen::Index k = 0; k < dim; ++k) a(k) = normal(rng);
    for (Eigen::Index k = 0; k < dim; ++k) {
      for (Eigen::Index n = 0; n < dim; ++n) {
        if (k != n) extra(k, n) += 0.5 * (a(k) - a(n)) * (a(k) - a(n));
      }
    }
  }
  return RateModel::with_decay_induced_dephasing(gamma, extra);
}

}  // namespace dissq
