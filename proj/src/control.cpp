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

#include "dissq/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dissq {

namespace {

const DensityMatrix& state_at(const Trajectory& traj, double horizon) {
  if (traj.size() == 0) throw std::invalid_argument("objective: empty trajectory");
  if (horizon <= 0.0) return traj.final_state();
  const double eps = 1e-9 * std::max(1.0, horizon);
  if (traj.final_time() < horizon - eps) {
    throw std::invalid_argument("objective: trajectory ends at t = " +
                                std::to_string(traj.final_time()) + " before the horizon " +
                                std::to_string(horizon));
  }
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (std::abs(traj.times[k] - horizon) <= eps) return traj.states[k];
  }
  throw std::invalid_argument("objective: horizon is not a recorded sample time");
}

}  // namespace

double evaluate_objective(const Objective& obj, const Trajectory& traj, double horizon) {
  const DensityMatrix& rho = state_at(traj, horizon);
  switch (obj.kind) {
    case ObjectiveKind::max_entropy_final:
      return std::abs(rho.purity() - 1.0 / static_cast<double>(rho.dim()));
    case ObjectiveKind::target_state_distance:
      if (!obj.target) throw std::invalid_argument("objective: target state required");
      if (obj.target->dim() != rho.dim()) throw DimensionError("objective: target dimension mismatch");
      return (rho.entries() - obj.target->entries()).norm();
    case ObjectiveKind::target_population:
      if (obj.target_level < 0 || obj.target_level >= rho.dim()) {
        throw std::invalid_argument("objective: target level out of range");
      }
      return 1.0 - rho(obj.target_level, obj.target_level).real();
  }
  throw std::invalid_argument("objective: unknown kind");
}

std::string parameter_name(PulseParameter p) {
  switch (p) {
    case PulseParameter::area: return "area";
    case PulseParameter::duration: return "duration";
    case PulseParameter::width: return "width";
  }
  return "?";
}

PulseSpec instantiate(const PulseTemplate& tmpl, const std::vector<double>& values) {
  if (values.size() != tmpl.free.size()) {
    throw DimensionError("instantiate: one value per free parameter required");
  }
  PulseSpec p = tmpl.base;
  for (std::size_t i = 0; i < values.size(); ++i) {
    switch (tmpl.free[i].which) {
      case PulseParameter::area:
        p.effective_area = values[i];
        break;
      case PulseParameter::duration:
        p.duration = values[i];
        p.center = p.start + values[i] / 2.0;
        if (p.shape == PulseShape::gaussian) p.width = values[i] / 6.0;
        break;
      case PulseParameter::width:
        p.width = values[i];
        break;
    }
  }
  // width after duration regardless of listing order
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (tmpl.free[i].which == PulseParameter::width) p.width = values[i];
  }
  return p;
}

DensityMatrix final_state_for_pulse(const Liouvillian& l, const PulseSpec& pulse,
                                    const DensityMatrix& rho0, double horizon,
                                    const IntegratorConfig& integ) {
  const double end = std::max(horizon, pulse.end());
  const std::vector<PulseSpec> pulses{pulse};
  return evolve(l, pulses, rho0, end, end, integ).final_state();
}

OptResult optimize_pulse(const ControlSystem& sys, const RateModel& model,
                         const DensityMatrix& rho0, const PulseTemplate& tmpl,
                         const Objective& obj, const MinimizerConfig& search,
                         const IntegratorConfig& integ) {
  if (tmpl.free.empty() || tmpl.free.size() > 3) {
    throw std::invalid_argument("optimize_pulse: between one and three free parameters required");
  }
  check_pulse(tmpl.base);
  if (tmpl.base.field_index >= sys.num_controls()) {
    throw DimensionError("optimize_pulse: pulse drives a missing control");
  }
  require_complete_positivity(model);
  const Liouvillian l = build_liouvillian(sys, model);

  std::vector<ParameterBounds> bounds;
  for (const FreeParameter& p : tmpl.free) {
    bounds.push_back(p.bounds);
    if (p.which != PulseParameter::area && !(p.bounds.lower > 0.0)) {
      throw std::invalid_argument("optimize_pulse: duration/width bounds must be positive");
    }
    if (p.which == PulseParameter::area && p.bounds.lower < 0.0) {
      throw std::invalid_argument("optimize_pulse: area bounds must be non-negative");
    }
  }

  auto score = [&](const std::vector<double>& x) {
    const PulseSpec p = instantiate(tmpl, x);
    const double end = obj.horizon > 0.0 ? std::max(obj.horizon, p.end()) : p.end();
    const std::vector<PulseSpec> pulses{p};
    const Trajectory traj = evolve(l, pulses, rho0, end, end, integ);
    return evaluate_objective(obj, traj, obj.horizon > 0.0 ? obj.horizon : end);
  };

  MinimizeResult r = minimize_bounded(score, bounds, search);
  OptResult out;
  for (const FreeParameter& p : tmpl.free) out.names.push_back(parameter_name(p.which));
  out.best_params = std::move(r.best_params);
  out.best_value = r.best_value;
  out.evaluations = r.evaluations;
  out.budget_exhausted = r.budget_exhausted;
  out.history = std::move(r.history);
  return out;
}

ComparisonRecord naive_vs_optimized_report(const ControlSystem& sys, const RateModel& model,
                                           const DensityMatrix& rho0, const PulseSpec& pulse,
                                           double naive_area, double optimized_area,
                                           const IntegratorConfig& integ) {
  require_complete_positivity(model);
  const Liouvillian l = build_liouvillian(sys, model);
  ComparisonRecord rec;
  rec.naive_area = naive_area;
  rec.optimized_area = optimized_area;
  PulseSpec p = pulse;
  p.effective_area = naive_area;
  rec.naive_purity_deficit = purity_deficit(final_state_for_pulse(l, p, rho0, p.end(), integ));
  p.effective_area = optimized_area;
  rec.optimized_purity_deficit =
      purity_deficit(final_state_for_pulse(l, p, rho0, p.end(), integ));
  rec.optimized_not_worse = rec.optimized_purity_deficit >= rec.naive_purity_deficit - 1e-9;
  return rec;
}

}  // namespace dissq
