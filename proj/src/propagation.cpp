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

#include "dissq/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace dissq {

void Trajectory::record(double t, DensityMatrix rho) {
  purity_deficit.push_back(dissq::purity_deficit(rho));
  renyi_entropy.push_back(dissq::renyi_entropy(rho));
  times.push_back(t);
  states.push_back(std::move(rho));
}

namespace {

void check_positivity(const DensityMatrix& rho, double t, double tol) {
  const ValidationReport r = validate(rho, tol);
  if (r.min_eigenvalue < -tol) {
    throw PositivityViolation("state lost positivity at t = " + std::to_string(t) +
                                  " (min eigenvalue " + std::to_string(r.min_eigenvalue) + ")",
                              t);
  }
}

// Output times 0, dt, 2 dt, ..., with the final time always included.
std::vector<double> output_grid(double duration, double dt_out) {
  std::vector<double> grid{0.0};
  const auto n = static_cast<std::size_t>(std::floor(duration / dt_out + 1e-9));
  for (std::size_t k = 1; k <= n; ++k) grid.push_back(static_cast<double>(k) * dt_out);
  if (duration - grid.back() > 1e-12 * std::max(1.0, duration)) {
    grid.push_back(duration);
  } else {
    grid.back() = duration;
  }
  return grid;
}

}  // namespace

Trajectory evolve(const Liouvillian& l, std::span<const PulseSpec> pulses,
                  const DensityMatrix& rho0, double duration, double dt_out,
                  const IntegratorConfig& config) {
  IntegratorConfig cfg = config;
  for (const PulseSpec& p : pulses) {
    if (p.frame == Frame::lab && p.carrier_frequency > 0.0) {
      cfg.max_step = std::min(cfg.max_step, (2.0 * kPi / p.carrier_frequency) / 40.0);
    }
  }
  return evolve(l, ControlSchedule::from_pulses(pulses, l.num_controls()), rho0, duration,
                dt_out, cfg);
}

Trajectory evolve(const Liouvillian& l, const ControlSchedule& schedule,
                  const DensityMatrix& rho0, double duration, double dt_out,
                  const IntegratorConfig& config) {
  if (rho0.dim() != l.dim) throw DimensionError("evolve: state and Liouvillian dimensions differ");
  if (schedule.num_fields != l.num_controls()) {
    throw DimensionError("evolve: schedule has " + std::to_string(schedule.num_fields) +
                         " fields, Liouvillian has " + std::to_string(l.num_controls()) +
                         " controls");
  }
  if (!(duration > 0.0) || !(dt_out > 0.0)) {
    throw std::invalid_argument("evolve: duration and dt_out must be positive");
  }
  {
    const ValidationReport r = validate(rho0, 1e-6);
    if (!r.passed) throw std::invalid_argument("evolve: initial state is not a valid density matrix");
  }

  // Split-form generator: dy/dt = A0 y + sum_m f_m A_m y.
  const Matrix a0 = -kI * l.drift + l.dissipation;
  std::vector<Matrix> am;
  am.reserve(l.controls.size());
  for (const Matrix& lm : l.controls) am.push_back(-kI * lm);

  std::vector<double> f(schedule.num_fields, 0.0);
  double seg_lo = 0.0, seg_hi = 0.0;
  auto rhs = [&](double t, const Vector& y, Vector& dydt) {
    if (!f.empty()) {
      // Keep field lookups inside the current breakpoint interval so that
      // stages on an edge see the field of this interval.
      const double eps = 1e-12 * std::max(1.0, std::abs(seg_hi));
      const double lo = seg_lo + eps, hi = seg_hi - eps;
      const double te = lo < hi ? std::clamp(t, lo, hi) : 0.5 * (seg_lo + seg_hi);
      schedule.fields(te, f);
    }
    dydt.noalias() = a0 * y;
    for (std::size_t m = 0; m < am.size(); ++m) {
      if (f[m] != 0.0) dydt.noalias() += f[m] * (am[m] * y);
    }
  };
  DormandPrince45 stepper(rhs, config);

  const std::vector<double> grid = output_grid(duration, dt_out);
  std::vector<double> stops = grid;
  for (double b : schedule.breakpoints) {
    if (b > 0.0 && b < duration) stops.push_back(b);
  }
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end(),
                          [&](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, duration); }),
              stops.end());

  Trajectory traj;
  Vector y = vectorize(rho0);
  traj.record(0.0, rho0);
  std::size_t next_out = 1;
  for (std::size_t k = 1; k < stops.size(); ++k) {
    seg_lo = stops[k - 1];
    seg_hi = stops[k];
    stepper.integrate(seg_lo, seg_hi, y);
    if (next_out < grid.size() && std::abs(grid[next_out] - seg_hi) <= 1e-12 * std::max(1.0, duration)) {
      DensityMatrix rho = devectorize(y);
      check_positivity(rho, seg_hi, config.positivity_tol);
      traj.record(grid[next_out], std::move(rho));
      ++next_out;
    }
  }
  return traj;
}

Trajectory evolve_unitary(const ControlSystem& sys, const PiecewiseConstantFields& fields,
                          const DensityMatrix& rho0) {
  if (rho0.dim() != sys.dim()) throw DimensionError("evolve_unitary: dimension mismatch");
  if (fields.durations.size() != fields.values.size()) {
    throw DimensionError("evolve_unitary: one value row per segment required");
  }
  Trajectory traj;
  traj.record(0.0, rho0);
  Matrix rho = rho0.entries();
  double t = 0.0;
  for (std::size_t s = 0; s < fields.durations.size(); ++s) {
    const Matrix h = total_hamiltonian(sys, fields.values[s]);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
    const double tau = fields.durations[s];
    Vector phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k) {
      phases(k) = std::exp(-kI * es.eigenvalues()(k) * tau);
    }
    const Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    rho = u * rho * u.adjoint();
    t += tau;
    traj.record(t, DensityMatrix(rho));
  }
  return traj;
}

Trajectory evolve_expm(const Liouvillian& l, const PiecewiseConstantFields& fields,
                       const DensityMatrix& rho0) {
  if (rho0.dim() != l.dim) throw DimensionError("evolve_expm: dimension mismatch");
  if (fields.durations.size() != fields.values.size()) {
    throw DimensionError("evolve_expm: one value row per segment required");
  }
  Trajectory traj;
  traj.record(0.0, rho0);
  Vector y = vectorize(rho0);
  double t = 0.0;
  for (std::size_t s = 0; s < fields.durations.size(); ++s) {
    const Matrix g = l.generator(fields.values[s]) * fields.durations[s];
    const Matrix prop = g.exp();
    y = prop * y;
    t += fields.durations[s];
    traj.record(t, devectorize(y));
  }
  return traj;
}

}  // namespace dissq
