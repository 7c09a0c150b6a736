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

#include "dissq/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dissq {

namespace {

// Dormand-Prince tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// Difference between the 5th and embedded 4th order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - 0.75 * kBeta;

}  // namespace

DormandPrince45::DormandPrince45(Rhs rhs, IntegratorConfig config)
    : rhs_(std::move(rhs)), config_(config) {}

double DormandPrince45::error_norm(const Vector& y0, const Vector& y1,
                                   const Vector& err) const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double sc =
        config_.atol + config_.rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    const double q = std::abs(err(i)) / sc;
    acc += q * q;
  }
  return std::sqrt(acc / static_cast<double>(std::max<Eigen::Index>(1, err.size())));
}

double DormandPrince45::initial_step(double t0, const Vector& y, const Vector& f0,
                                     double span) const {
  if (config_.initial_step > 0.0) return config_.initial_step;
  const double scale_y = config_.atol + config_.rtol * y.cwiseAbs().maxCoeff();
  const double d0 = y.cwiseAbs().maxCoeff() / scale_y;
  const double d1 = f0.cwiseAbs().maxCoeff() / scale_y;
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h0 = std::min({h0, span, config_.max_step});

  Vector y1 = y + h0 * f0;
  Vector f1(y.size());
  rhs_(t0 + h0, y1, f1);
  const double d2 = (f1 - f0).cwiseAbs().maxCoeff() / scale_y / h0;
  const double h1 = (std::max(d1, d2) <= 1e-15)
                        ? std::max(1e-6, h0 * 1e-3)
                        : std::pow(0.01 / std::max(d1, d2), 1.0 / 5.0);
  return std::min({100.0 * h0, h1, span, config_.max_step});
}

void DormandPrince45::integrate(double t0, double t1, Vector& y) {
  if (t1 <= t0) return;
  for (auto& k : k_) k.resize(y.size());
  Vector ytmp(y.size()), ynew(y.size()), err(y.size());

  double t = t0;
  rhs_(t, y, k_[0]);
  ++stats_.rhs_evaluations;
  if (h_ <= 0.0) h_ = initial_step(t0, y, k_[0], t1 - t0);

  std::size_t steps = 0;
  while (t < t1) {
    if (++steps > config_.max_steps) {
      throw StepSizeUnderflow("integrator exceeded the maximum number of steps", t);
    }
    double h = std::min(h_, config_.max_step);
    bool last = false;
    if (t + h >= t1 || t + 1.01 * h >= t1) {
      h = t1 - t;
      last = true;
    }
    if (h < config_.min_step && !last) {
      throw StepSizeUnderflow("integrator step size underflow", t);
    }

    ytmp = y + h * a21 * k_[0];
    rhs_(t + c2 * h, ytmp, k_[1]);
    ytmp = y + h * (a31 * k_[0] + a32 * k_[1]);
    rhs_(t + c3 * h, ytmp, k_[2]);
    ytmp = y + h * (a41 * k_[0] + a42 * k_[1] + a43 * k_[2]);
    rhs_(t + c4 * h, ytmp, k_[3]);
    ytmp = y + h * (a51 * k_[0] + a52 * k_[1] + a53 * k_[2] + a54 * k_[3]);
    rhs_(t + c5 * h, ytmp, k_[4]);
    ytmp = y + h * (a61 * k_[0] + a62 * k_[1] + a63 * k_[2] + a64 * k_[3] + a65 * k_[4]);
    rhs_(t + h, ytmp, k_[5]);
    ynew = y + h * (a71 * k_[0] + a73 * k_[2] + a74 * k_[3] + a75 * k_[4] + a76 * k_[5]);
    rhs_(t + h, ynew, k_[6]);
    stats_.rhs_evaluations += 6;

    err = h * (e1 * k_[0] + e3 * k_[2] + e4 * k_[3] + e5 * k_[4] + e6 * k_[5] + e7 * k_[6]);
    const double en = error_norm(y, ynew, err);

    if (en <= 1.0) {
      ++stats_.accepted;
      const double fac = std::clamp(
          std::pow(en, kExpo) * std::pow(prev_err_, -kBeta) / kSafety, 1.0 / kMaxFactor,
          1.0 / kMinFactor);
      prev_err_ = std::max(en, 1e-4);
      y.swap(ynew);
      k_[0].swap(k_[6]);
      t = last ? t1 : t + h;
      // A truncated final step says nothing about the natural step size.
      if (!last || h >= h_) h_ = std::min(h / fac, config_.max_step);
    } else {
      ++stats_.rejected;
      const double fac = std::min(1.0 / kMinFactor, std::pow(en, kExpo) / kSafety);
      h_ = h / fac;
      if (h_ < config_.min_step) {
        throw StepSizeUnderflow("integrator step size underflow", t);
      }
    }
  }
}

}  // namespace dissq
