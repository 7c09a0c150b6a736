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

#include <optional>
#include <string>
#include <vector>

#include "dissq/dynamics.hpp"
#include "dissq/optimizer.hpp"
#include "dissq/propagation.hpp"

namespace dissq {

enum class ObjectiveKind { max_entropy_final, target_state_distance, target_population };

/// Terminal-state goal, lower is better.
struct Objective {
  ObjectiveKind kind = ObjectiveKind::max_entropy_final;
  std::optional<DensityMatrix> target;  // target_state_distance
  Eigen::Index target_level = 0;        // target_population, 0-based
  // Final time at which the goal is scored; <= 0 means the end of the pulse.
  double horizon = 0.0;
};

// Throws std::invalid_argument when the trajectory stops short of `horizon`
// or the objective lacks its target.
double evaluate_objective(const Objective& obj, const Trajectory& traj, double horizon);
inline double evaluate_objective(const Objective& obj, const Trajectory& traj) {
  return evaluate_objective(obj, traj, obj.horizon);
}

enum class PulseParameter { area, duration, width };

struct FreeParameter {
  PulseParameter which = PulseParameter::area;
  ParameterBounds bounds;
};

struct PulseTemplate {
  PulseSpec base;
  std::vector<FreeParameter> free;  // 1 to 3 entries
};

// Copy of the template pulse with `values` substituted for the free
// parameters. Changing a gaussian's duration re-centres it and resets
// sigma = duration / 6.
PulseSpec instantiate(const PulseTemplate& tmpl, const std::vector<double>& values);

std::string parameter_name(PulseParameter p);

struct OptResult {
  std::vector<std::string> names;
  std::vector<double> best_params;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  bool budget_exhausted = false;
  std::vector<Evaluation> history;
};

/// Searches the template's free parameters (golden section for one,
/// Nelder-Mead for two or three). The control system must be expressed in
/// the frame the pulse uses: the rotating frame for Frame::rwa. Throws
/// CompletePositivityError for an inconsistent rate model and
/// std::invalid_argument for infeasible bounds or parameter counts.
OptResult optimize_pulse(const ControlSystem& sys, const RateModel& model,
                         const DensityMatrix& rho0, const PulseTemplate& tmpl,
                         const Objective& obj, const MinimizerConfig& search = {},
                         const IntegratorConfig& integ = {});

struct ComparisonRecord {
  double naive_area = 0.0;
  double optimized_area = 0.0;
  double naive_purity_deficit = 0.0;
  double optimized_purity_deficit = 0.0;
  // optimized >= naive (within 1e-9)
  bool optimized_not_worse = false;
};

/// Final purity deficit of the pulse at `naive_area` versus `optimized_area`,
/// all other pulse parameters taken from `pulse`.
ComparisonRecord naive_vs_optimized_report(const ControlSystem& sys, const RateModel& model,
                                           const DensityMatrix& rho0, const PulseSpec& pulse,
                                           double naive_area, double optimized_area,
                                           const IntegratorConfig& integ = {});

// Final state after a single pulse; the run extends to max(horizon, pulse end).
DensityMatrix final_state_for_pulse(const Liouvillian& l, const PulseSpec& pulse,
                                    const DensityMatrix& rho0, double horizon,
                                    const IntegratorConfig& integ = {});

}  // namespace dissq
