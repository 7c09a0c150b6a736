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

#include <functional>
#include <span>
#include <vector>

#include "dissq/dynamics.hpp"
#include "dissq/integrator.hpp"
#include "dissq/liouville.hpp"
#include "dissq/states.hpp"

namespace dissq {

enum class PulseShape { constant, gaussian };
enum class Frame { lab, rwa };

/// A single shaped pulse driving control `field_index` (0-based).
///
/// The strength is given as an effective pulse area theta = integral of the
/// Rabi frequency Omega(t) = coupling * A(t). A resonant area-theta pulse on a
/// closed two-level system transfers sin^2(theta / 2) of the population.
///
/// Field values: lab frame f(t) = A(t) cos(carrier t); rwa frame
/// f(t) = A(t) / 2, to be used with a Liouvillian built in the frame
/// rotating at the carrier. The pulse is active on [start, start + duration]
/// and zero elsewhere.
struct PulseSpec {
  PulseShape shape = PulseShape::constant;
  std::size_t field_index = 0;
  double carrier_frequency = 1.0;
  double effective_area = 0.0;
  double duration = 1.0;
  double start = 0.0;
  double center = 0.5;  // absolute time, gaussian only
  double width = 1.0;   // sigma, gaussian only
  double coupling = 1.0;  // dipole scale of the driven control Hamiltonian
  Frame frame = Frame::rwa;

  /// Gaussian truncated at center +- 3 sigma: duration = 6 sigma, center at
  /// the middle of the window.
  static PulseSpec gaussian(double area, double duration, Frame frame,
                            double carrier = 1.0, std::size_t field = 0,
                            double coupling = 1.0);
  static PulseSpec constant(double area, double duration, Frame frame,
                            double carrier = 1.0, std::size_t field = 0,
                            double coupling = 1.0);

  double end() const { return start + duration; }
  // Envelope peak A0 fixed by the area calibration.
  double peak_amplitude() const;
  // A(t) including the peak, zero outside the pulse window.
  double envelope(double t) const;
  // Field contribution at t, zero outside the pulse window.
  double field(double t) const;
};

// Throws std::invalid_argument unless the pulse is well formed (positive
// duration and width, non-negative area, finite values).
void check_pulse(const PulseSpec& p);

/// Field value of `p` at t. Throws std::out_of_range when t lies outside
/// [start, start + duration].
double sample_pulse(const PulseSpec& p, double t);

/// Time-dependent control fields for all M controls. Breakpoints mark times
/// where the fields may be discontinuous; propagation never steps across one.
struct ControlSchedule {
  std::size_t num_fields = 0;
  std::function<void(double t, std::span<double> out)> fields;
  std::vector<double> breakpoints;

  static ControlSchedule from_pulses(std::span<const PulseSpec> pulses,
                                     std::size_t num_fields);
  static ControlSchedule constant(std::vector<double> values);
};

/// Piecewise-constant fields: segment s lasts durations[s] and holds
/// values[s] (one entry per control).
struct PiecewiseConstantFields {
  std::vector<double> durations;
  std::vector<std::vector<double>> values;

  double total_duration() const;
  ControlSchedule schedule() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> purity_deficit;
  std::vector<double> renyi_entropy;

  void record(double t, DensityMatrix rho);
  std::size_t size() const { return times.size(); }
  const DensityMatrix& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

/// Integrates d|rho>/dt = G(f(t)) |rho> from 0 to `duration` with the
/// adaptive Dormand-Prince integrator, recording every `dt_out` and at the
/// final time. Lab-frame pulses cap the step at a fortieth of the carrier
/// period.
///
/// Throws StepSizeUnderflow from the integrator and PositivityViolation
/// (with time stamp) when a recorded state's smallest eigenvalue falls below
/// -positivity_tol.
Trajectory evolve(const Liouvillian& l, std::span<const PulseSpec> pulses,
                  const DensityMatrix& rho0, double duration, double dt_out,
                  const IntegratorConfig& config = {});
Trajectory evolve(const Liouvillian& l, const ControlSchedule& schedule,
                  const DensityMatrix& rho0, double duration, double dt_out,
                  const IntegratorConfig& config = {});

/// Closed-system propagation rho -> U rho U^dag with U = exp(-i H_s tau_s) per
/// segment, built from the Hermitian eigendecomposition of each H_s. Records
/// the initial state and the state after every segment.
Trajectory evolve_unitary(const ControlSystem& sys, const PiecewiseConstantFields& fields,
                          const DensityMatrix& rho0);

/// Open-system propagation with exact superoperator exponentials per
/// segment. Records like evolve_unitary.
Trajectory evolve_expm(const Liouvillian& l, const PiecewiseConstantFields& fields,
                       const DensityMatrix& rho0);

}  // namespace dissq
