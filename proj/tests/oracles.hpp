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

// Reference computations written directly from the component formulas with
// plain loops, independent of the library's superoperator and integrator
// code paths.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline CMat commutator(const CMat& a, const CMat& b) {
  const Eigen::Index n = a.rows();
  CMat out = CMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) out(i, j) += a(i, k) * b(k, j) - b(i, k) * a(k, j);
  return out;
}

// d rho_nn = sum_k gamma_nk rho_kk - gamma_kn rho_nn; d rho_kn = -Gamma_kn rho_kn
inline CMat rate_dissipator(const RMat& gamma, const RMat& deph, const CMat& rho) {
  const Eigen::Index n = rho.rows();
  CMat out = CMat::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      if (a == b) {
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == a) continue;
          out(a, a) += gamma(a, k) * rho(k, k) - gamma(k, a) * rho(a, a);
        }
      } else {
        out(a, b) = -deph(a, b) * rho(a, b);
      }
    }
  }
  return out;
}

// sum_s V rho V^dag - (V^dag V rho + rho V^dag V) / 2, entry by entry
inline CMat lindblad_dissipator(const std::vector<CMat>& ops, const CMat& rho) {
  const Eigen::Index n = rho.rows();
  CMat out = CMat::Zero(n, n);
  for (const CMat& v : ops) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        Complex acc = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          for (Eigen::Index l = 0; l < n; ++l) {
            acc += v(i, k) * rho(k, l) * std::conj(v(j, l));
            // (V^dag V)_{ik} rho_{kj} and rho_{ik} (V^dag V)_{kj}
            acc -= 0.5 * std::conj(v(l, i)) * v(l, k) * rho(k, j);
            acc -= 0.5 * rho(i, k) * std::conj(v(l, k)) * v(l, j);
          }
        }
        out(i, j) += acc;
      }
    }
  }
  return out;
}

// Row-major flattening.
inline Eigen::VectorXcd flatten(const CMat& m) {
  Eigen::VectorXcd v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

// exp(-i H t) for 2x2 Hermitian H = a0 I + a . sigma
inline CMat unitary_2x2(const CMat& h, double t) {
  const double a0 = 0.5 * (h(0, 0) + h(1, 1)).real();
  const double ax = h(0, 1).real();
  const double ay = -h(0, 1).imag();
  const double az = 0.5 * (h(0, 0) - h(1, 1)).real();
  const double norm = std::sqrt(ax * ax + ay * ay + az * az);
  CMat u(2, 2);
  const Complex phase = std::exp(Complex(0.0, -a0 * t));
  if (norm == 0.0) {
    u.setIdentity();
    return phase * u;
  }
  const double c = std::cos(norm * t);
  const double s = std::sin(norm * t) / norm;
  const Complex mi(0.0, -1.0);
  u(0, 0) = c + mi * s * az;
  u(1, 1) = c - mi * s * az;
  u(0, 1) = mi * s * Complex(ax, -ay);
  u(1, 0) = mi * s * Complex(ax, ay);
  return phase * u;
}

// Composite Simpson rule with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

inline double max_abs(const CMat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracle
