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

#include "dissq/liouville.hpp"

#include <cmath>

namespace dissq {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

Vector vectorize(const Matrix& m) {
  const Eigen::Index n = m.rows();
  Vector v(n * m.cols());
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) v(liouville_index(r, c, m.cols())) = m(r, c);
  }
  return v;
}

Vector vectorize(const DensityMatrix& rho) { return vectorize(rho.entries()); }

DensityMatrix devectorize(const Vector& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size() || n == 0) {
    throw DimensionError("devectorize: length is not a perfect square");
  }
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = v(liouville_index(r, c, n));
  }
  return DensityMatrix(std::move(m));
}

Matrix Liouvillian::generator(std::span<const double> f) const {
  if (f.size() != controls.size()) {
    throw DimensionError("Liouvillian::generator: expected " +
                         std::to_string(controls.size()) + " field values");
  }
  Matrix coherent = drift;
  for (std::size_t m = 0; m < f.size(); ++m) coherent += f[m] * controls[m];
  return -kI * coherent + dissipation;
}

Matrix commutator_superoperator(const Matrix& h) {
  const Eigen::Index n = h.rows();
  const Matrix id = Matrix::Identity(n, n);
  return kron(h, id) - kron(id, h.transpose());
}

Matrix rate_superoperator(const RateModel& model) {
  const Eigen::Index n = model.dim();
  Matrix ld = Matrix::Zero(n * n, n * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (k == j) continue;
      const Eigen::Index kj = liouville_index(k, j, n);
      ld(kj, kj) = -model.dephasing()(k, j);
      ld(liouville_index(j, j, n), liouville_index(k, k, n)) = model.gamma()(j, k);
    }
    ld(liouville_index(k, k, n), liouville_index(k, k, n)) = -model.total_decay(k);
  }
  return ld;
}

Matrix lindblad_superoperator(const LindbladChannels& channels, Eigen::Index dim) {
  const Matrix id = Matrix::Identity(dim, dim);
  Matrix ld = Matrix::Zero(dim * dim, dim * dim);
  for (const Matrix& v : channels.ops) {
    if (v.rows() != dim || v.cols() != dim) {
      throw DimensionError("lindblad_superoperator: operator shape mismatch");
    }
    const Matrix vdv = v.adjoint() * v;
    ld += kron(v, v.conjugate()) - 0.5 * kron(vdv, id) - 0.5 * kron(id, vdv.transpose());
  }
  return ld;
}

namespace {

Liouvillian coherent_part(const ControlSystem& sys) {
  Liouvillian l;
  l.dim = sys.dim();
  l.drift = commutator_superoperator(sys.drift());
  for (const Matrix& h : sys.controls()) l.controls.push_back(commutator_superoperator(h));
  return l;
}

}  // namespace

Liouvillian build_liouvillian(const ControlSystem& sys, const RateModel& model) {
  if (model.dim() != sys.dim()) {
    throw DimensionError("build_liouvillian: rate model and system dimensions differ");
  }
  Liouvillian l = coherent_part(sys);
  l.dissipation = rate_superoperator(model);
  return l;
}

Liouvillian build_liouvillian(const ControlSystem& sys, const LindbladChannels& channels) {
  Liouvillian l = coherent_part(sys);
  l.dissipation = lindblad_superoperator(channels, sys.dim());
  return l;
}

DisjointnessReport support_disjointness(const Liouvillian& l, double tol) {
  DisjointnessReport r;
  const Eigen::Index size = l.dissipation.rows();
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      if (std::abs(l.dissipation(i, j)) <= tol) continue;
      for (const Matrix& lm : l.controls) {
        if (std::abs(lm(i, j)) > tol) {
          r.overlapping_entries.emplace_back(i, j);
          break;
        }
      }
    }
  }
  r.disjoint = r.overlapping_entries.empty();
  return r;
}

double cancellation_residual(const Liouvillian& l, const DensityMatrix& rho) {
  const Vector v = vectorize(rho);
  const Vector target = kI * (l.dissipation * v);
  const Eigen::Index size = v.size();
  const auto m = static_cast<Eigen::Index>(l.controls.size());
  if (m == 0) return target.norm();

  // Real least squares on stacked real/imaginary parts: A f = -b.
  RealMatrix a(2 * size, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Vector col = l.controls[static_cast<std::size_t>(k)] * v;
    a.col(k) << col.real(), col.imag();
  }
  RealVector b(2 * size);
  b << target.real(), target.imag();
  const RealVector f = a.completeOrthogonalDecomposition().solve(-b);
  return (a * f + b).norm();
}

}  // namespace dissq
