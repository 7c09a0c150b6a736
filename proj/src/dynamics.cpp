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

#include "dissq/dynamics.hpp"

#include <cmath>
#include <utility>

namespace dissq {

namespace {

void require_square(const Matrix& m, Eigen::Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(dim) +
                         "x" + std::to_string(dim) + " matrix");
  }
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// Centred Gram matrix of the excess dephasing, -J (2 Gamma~) J / 2.
RealMatrix excess_dephasing_gram(const RateModel& model) {
  const Eigen::Index n = model.dim();
  RealMatrix d = RealMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (k == j) continue;
      const double floor = 0.5 * (model.total_decay(k) + model.total_decay(j));
      d(k, j) = 2.0 * (model.dephasing()(k, j) - floor);
    }
  }
  const RealMatrix centring =
      RealMatrix::Identity(n, n) - RealMatrix::Constant(n, n, 1.0 / static_cast<double>(n));
  return -0.5 * centring * d * centring;
}

}  // namespace

ControlSystem::ControlSystem(Matrix h0, std::vector<Matrix> controls,
                             std::vector<std::string> labels, double tol)
    : h0_(std::move(h0)), controls_(std::move(controls)), labels_(std::move(labels)) {
  if (h0_.rows() != h0_.cols() || h0_.rows() == 0) {
    throw DimensionError("ControlSystem: H0 must be square and non-empty");
  }
  if (hermiticity_defect(h0_) > tol) {
    throw std::invalid_argument("ControlSystem: H0 is not Hermitian");
  }
  for (std::size_t m = 0; m < controls_.size(); ++m) {
    require_square(controls_[m], dim(), "ControlSystem control Hamiltonian");
    if (hermiticity_defect(controls_[m]) > tol) {
      throw std::invalid_argument("ControlSystem: control Hamiltonian " +
                                  std::to_string(m + 1) + " is not Hermitian");
    }
  }
  if (labels_.empty()) {
    for (std::size_t m = 0; m < controls_.size(); ++m) {
      labels_.push_back("f" + std::to_string(m + 1));
    }
  } else if (labels_.size() != controls_.size()) {
    throw DimensionError("ControlSystem: one label per control required");
  }
}

Matrix total_hamiltonian(const ControlSystem& sys, std::span<const double> f) {
  if (f.size() != sys.num_controls()) {
    throw DimensionError("total_hamiltonian: expected " +
                         std::to_string(sys.num_controls()) + " field values, got " +
                         std::to_string(f.size()));
  }
  Matrix h = sys.drift();
  for (std::size_t m = 0; m < f.size(); ++m) {
    h += f[m] * sys.controls()[m];
  }
  return h;
}

RateModel::RateModel(RealMatrix gamma, RealMatrix dephasing)
    : gamma_(std::move(gamma)), dephasing_(std::move(dephasing)) {
  const Eigen::Index n = gamma_.rows();
  if (n == 0 || gamma_.cols() != n || dephasing_.rows() != n || dephasing_.cols() != n) {
    throw DimensionError("RateModel: gamma and dephasing must be matching square matrices");
  }
  if (!gamma_.allFinite() || !dephasing_.allFinite()) {
    throw std::invalid_argument("RateModel: rates must be finite");
  }
  if (gamma_.minCoeff() < 0.0 || dephasing_.minCoeff() < 0.0) {
    throw std::invalid_argument("RateModel: rates must be non-negative");
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    if (gamma_(k, k) != 0.0 || dephasing_(k, k) != 0.0) {
      throw std::invalid_argument("RateModel: diagonal rates must be zero");
    }
  }
  if ((dephasing_ - dephasing_.transpose()).cwiseAbs().maxCoeff() > 0.0) {
    throw std::invalid_argument("RateModel: dephasing matrix must be symmetric");
  }
}

RateModel RateModel::zero(Eigen::Index dim) {
  return RateModel(RealMatrix::Zero(dim, dim), RealMatrix::Zero(dim, dim));
}

RateModel RateModel::two_level(double gamma_12, double gamma_21, double dephasing) {
  RealMatrix g = RealMatrix::Zero(2, 2);
  g(0, 1) = gamma_12;
  g(1, 0) = gamma_21;
  RealMatrix d = RealMatrix::Zero(2, 2);
  d(0, 1) = d(1, 0) = dephasing;
  return RateModel(std::move(g), std::move(d));
}

RateModel RateModel::with_decay_induced_dephasing(const RealMatrix& gamma,
                                                  const RealMatrix& extra) {
  const Eigen::Index n = gamma.rows();
  if (gamma.cols() != n) throw DimensionError("RateModel: gamma must be square");
  if (extra.size() != 0 && (extra.rows() != n || extra.cols() != n)) {
    throw DimensionError("RateModel: extra dephasing shape mismatch");
  }
  const RealVector out = gamma.colwise().sum().transpose();
  RealMatrix d = RealMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (k == j) continue;
      d(k, j) = 0.5 * (out(k) + out(j)) + (extra.size() ? extra(k, j) : 0.0);
    }
  }
  return RateModel(gamma, std::move(d));
}

double RateModel::total_decay(Eigen::Index n) const { return gamma_.col(n).sum(); }

bool RateModel::is_zero() const { return gamma_.isZero(0.0) && dephasing_.isZero(0.0); }

PositivityReport complete_positivity(const RateModel& model, double tol) {
  PositivityReport r;
  const Eigen::Index n = model.dim();
  r.min_pair_margin = 0.0;
  bool first = true;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = k + 1; j < n; ++j) {
      const double margin = model.dephasing()(k, j) -
                            0.5 * (model.total_decay(k) + model.total_decay(j));
      r.min_pair_margin = first ? margin : std::min(r.min_pair_margin, margin);
      first = false;
    }
  }
  if (n > 1) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(excess_dephasing_gram(model),
                                                 Eigen::EigenvaluesOnly);
    r.min_gram_eigenvalue = es.eigenvalues().minCoeff();
  }
  const double scale = 1.0 + model.gamma().cwiseAbs().maxCoeff() +
                       model.dephasing().cwiseAbs().maxCoeff();
  r.completely_positive =
      r.min_pair_margin >= -tol * scale && r.min_gram_eigenvalue >= -tol * scale;
  return r;
}

void require_complete_positivity(const RateModel& model, double tol) {
  const PositivityReport r = complete_positivity(model, tol);
  if (!r.completely_positive) {
    throw CompletePositivityError(
        "rate model violates complete positivity: dephasing below the decay-induced "
        "floor (min margin " + std::to_string(r.min_pair_margin) +
        ", min Gram eigenvalue " + std::to_string(r.min_gram_eigenvalue) + ")");
  }
}

Matrix dissipator_rates(const RateModel& model, const DensityMatrix& rho) {
  const Eigen::Index n = model.dim();
  require_square(rho.entries(), n, "dissipator_rates");
  Matrix d(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (k == j) {
        double rate = 0.0;
        for (Eigen::Index m = 0; m < n; ++m) {
          if (m == k) continue;
          rate += model.gamma()(k, m) * rho(m, m).real() - model.gamma()(m, k) * rho(k, k).real();
        }
        d(k, k) = rate;
      } else {
        d(k, j) = -model.dephasing()(k, j) * rho(k, j);
      }
    }
  }
  return d;
}

Matrix dissipator_lindblad(const LindbladChannels& channels, const DensityMatrix& rho) {
  const Eigen::Index n = rho.dim();
  Matrix d = Matrix::Zero(n, n);
  const Matrix& r = rho.entries();
  for (const Matrix& v : channels.ops) {
    require_square(v, n, "dissipator_lindblad");
    const Matrix vd = v.adjoint();
    d += commutator(v * r, vd) + commutator(v, r * vd);
  }
  return 0.5 * d;
}

LindbladChannels rates_to_lindblad(const RateModel& model, double tol) {
  require_complete_positivity(model, tol);
  const Eigen::Index n = model.dim();
  LindbladChannels out;
  if (n == 2) {
    const double g12 = model.gamma()(0, 1);
    const double g21 = model.gamma()(1, 0);
    const double excess = std::max(0.0, model.dephasing()(0, 1) - 0.5 * (g12 + g21));
    Matrix v1 = Matrix::Zero(2, 2), v2 = Matrix::Zero(2, 2), v3 = Matrix::Zero(2, 2);
    v1(1, 0) = std::sqrt(g21);
    v2(0, 1) = std::sqrt(g12);
    v3(0, 0) = std::sqrt(2.0 * excess);
    out.ops = {std::move(v1), std::move(v2), std::move(v3)};
    return out;
  }

  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (model.gamma()(j, k) > 0.0) {
        Matrix v = Matrix::Zero(n, n);
        v(j, k) = std::sqrt(model.gamma()(j, k));
        out.ops.push_back(std::move(v));
      }
    }
  }
  if (n > 1) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(excess_dephasing_gram(model));
    for (Eigen::Index s = 0; s < n; ++s) {
      const double lambda = es.eigenvalues()(s);
      if (lambda <= tol) continue;
      const RealVector a = std::sqrt(lambda) * es.eigenvectors().col(s);
      out.ops.push_back(Matrix(a.cast<Complex>().asDiagonal()));
    }
  }
  return out;
}

ControlSystem standard_two_level(const TwoLevelSystem& sys) {
  if (!(sys.e1 < sys.e2)) {
    throw std::invalid_argument("standard_two_level: requires E1 < E2");
  }
  Matrix h0 = Matrix::Zero(2, 2);
  h0(0, 0) = sys.e1;
  h0(1, 1) = sys.e2;
  Matrix h1(2, 2), h2(2, 2);
  h1 << 0.0, 1.0, 1.0, 0.0;
  h2 << 0.0, -kI, kI, 0.0;
  return ControlSystem(std::move(h0), {sys.d1 * h1, sys.d2 * h2}, {"f1", "f2"});
}

ControlSystem rotating_frame_two_level(const TwoLevelSystem& sys, double carrier) {
  ControlSystem lab = standard_two_level(sys);
  Matrix h0 = Matrix::Zero(2, 2);
  h0(1, 1) = sys.omega() - carrier;
  return ControlSystem(std::move(h0), lab.controls(), lab.labels());
}

}  // namespace dissq
