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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dissq/propagation.hpp"

namespace dissq {

PulseSpec PulseSpec::gaussian(double area, double duration, Frame frame, double carrier,
                              std::size_t field, double coupling) {
  PulseSpec p;
  p.shape = PulseShape::gaussian;
  p.field_index = field;
  p.carrier_frequency = carrier;
  p.effective_area = area;
  p.duration = duration;
  p.center = duration / 2.0;
  p.width = duration / 6.0;
  p.coupling = coupling;
  p.frame = frame;
  return p;
}

PulseSpec PulseSpec::constant(double area, double duration, Frame frame, double carrier,
                              std::size_t field, double coupling) {
  PulseSpec p;
  p.shape = PulseShape::constant;
  p.field_index = field;
  p.carrier_frequency = carrier;
  p.effective_area = area;
  p.duration = duration;
  p.center = duration / 2.0;
  p.coupling = coupling;
  p.frame = frame;
  return p;
}

void check_pulse(const PulseSpec& p) {
  if (!(p.duration > 0.0) || !std::isfinite(p.duration)) {
    throw std::invalid_argument("pulse duration must be positive");
  }
  if (!(p.effective_area >= 0.0) || !std::isfinite(p.effective_area)) {
    throw std::invalid_argument("pulse effective area must be non-negative");
  }
  if (p.coupling == 0.0 || !std::isfinite(p.coupling)) {
    throw std::invalid_argument("pulse coupling must be nonzero");
  }
  if (!std::isfinite(p.carrier_frequency) || !std::isfinite(p.start)) {
    throw std::invalid_argument("pulse carrier and start must be finite");
  }
  if (p.shape == PulseShape::gaussian &&
      (!(p.width > 0.0) || !std::isfinite(p.width) || !std::isfinite(p.center))) {
    throw std::invalid_argument("gaussian pulse width must be positive");
  }
}

namespace {

// Integral of the unit-peak envelope over the pulse window.
double unit_envelope_integral(const PulseSpec& p) {
  if (p.shape == PulseShape::constant) return p.duration;
  const double s = std::sqrt(2.0) * p.width;
  return p.width * std::sqrt(kPi / 2.0) *
         (std::erf((p.end() - p.center) / s) - std::erf((p.start - p.center) / s));
}

}  // namespace

double PulseSpec::peak_amplitude() const {
  return effective_area / (coupling * unit_envelope_integral(*this));
}

double PulseSpec::envelope(double t) const {
  if (t < start || t > end()) return 0.0;
  const double a0 = peak_amplitude();
  if (shape == PulseShape::constant) return a0;
  const double x = (t - center) / width;
  return a0 * std::exp(-0.5 * x * x);
}

double PulseSpec::field(double t) const {
  const double a = envelope(t);
  if (frame == Frame::rwa) return 0.5 * a;
  return a * std::cos(carrier_frequency * t);
}

double sample_pulse(const PulseSpec& p, double t) {
  check_pulse(p);
  if (t < p.start || t > p.end()) {
    throw std::out_of_range("sample_pulse: t = " + std::to_string(t) +
                            " outside the pulse window");
  }
  return p.field(t);
}

ControlSchedule ControlSchedule::from_pulses(std::span<const PulseSpec> pulses,
                                             std::size_t num_fields) {
  for (const PulseSpec& p : pulses) {
    check_pulse(p);
    if (p.field_index >= num_fields) {
      throw DimensionError("pulse drives control " + std::to_string(p.field_index + 1) +
                           " but the system has " + std::to_string(num_fields));
    }
  }
  ControlSchedule s;
  s.num_fields = num_fields;
  std::vector<PulseSpec> copy(pulses.begin(), pulses.end());
  for (const PulseSpec& p : copy) {
    s.breakpoints.push_back(p.start);
    s.breakpoints.push_back(p.end());
  }
  s.fields = [copy = std::move(copy)](double t, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (const PulseSpec& p : copy) out[p.field_index] += p.field(t);
  };
  return s;
}

ControlSchedule ControlSchedule::constant(std::vector<double> values) {
  ControlSchedule s;
  s.num_fields = values.size();
  s.fields = [values = std::move(values)](double, std::span<double> out) {
    std::copy(values.begin(), values.end(), out.begin());
  };
  return s;
}

double PiecewiseConstantFields::total_duration() const {
  double total = 0.0;
  for (double d : durations) total += d;
  return total;
}

ControlSchedule PiecewiseConstantFields::schedule() const {
  if (durations.size() != values.size()) {
    throw DimensionError("piecewise-constant fields: one value row per segment required");
  }
  ControlSchedule s;
  s.num_fields = values.empty() ? 0 : values.front().size();
  std::vector<double> edges{0.0};
  for (double d : durations) edges.push_back(edges.back() + d);
  s.breakpoints = edges;
  s.fields = [edges, vals = values](double t, std::span<double> out) {
    auto it = std::upper_bound(edges.begin(), edges.end(), t);
    std::size_t seg = it == edges.begin() ? 0 : static_cast<std::size_t>(it - edges.begin()) - 1;
    if (seg >= vals.size()) {
      std::fill(out.begin(), out.end(), 0.0);
      return;
    }
    std::copy(vals[seg].begin(), vals[seg].end(), out.begin());
  };
  return s;
}

}  // namespace dissq
