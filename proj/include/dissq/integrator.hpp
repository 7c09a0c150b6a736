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
#include <functional>
#include <limits>

#include "dissq/types.hpp"

namespace dissq {

struct IntegratorConfig {
  double rtol = 1e-9;
  double atol = 1e-9;
  // Upper bound on the step; infinity leaves it to the error controller.
  double max_step = std::numeric_limits<double>::infinity();
  double initial_step = 0.0;  // 0 picks a step from the local derivative
  double min_step = 1e-14;
  std::size_t max_steps = 10'000'000;
  // Tolerated negativity of the smallest eigenvalue of a recorded state.
  double positivity_tol = 1e-7;
};

struct IntegrationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evaluations = 0;
};

/// Dormand-Prince 5(4) with FSAL, local extrapolation and a PI step-size
/// controller, for complex linear or nonlinear systems y' = rhs(t, y).
class DormandPrince45 {
 public:
  using Rhs = std::function<void(double t, const Vector& y, Vector& dydt)>;

  DormandPrince45(Rhs rhs, IntegratorConfig config);

  /// Advances `y` from `t0` to `t1` in place. The last step is shortened to
  /// land exactly on t1; the step size carries over to the next call.
  /// Throws StepSizeUnderflow when the controller needs a step below
  /// min_step or max_steps is exceeded.
  void integrate(double t0, double t1, Vector& y);

  const IntegrationStats& stats() const { return stats_; }

 private:
  double initial_step(double t0, const Vector& y, const Vector& f0, double span) const;
  double error_norm(const Vector& y0, const Vector& y1, const Vector& err) const;

  Rhs rhs_;
  IntegratorConfig config_;
  IntegrationStats stats_;
  double h_ = 0.0;
  double prev_err_ = 1e-4;
  Vector k_[7];
};

}  // namespace dissq
