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

#include <utility>
#include <vector>

#include "dissq/dynamics.hpp"
#include "dissq/propagation.hpp"

namespace dissq {

/// Transition diagram of a degenerate ground/excited manifold pair.
///
/// Levels are identified by 1-based labels; the Hilbert-space order is the
/// ground labels followed by the excited labels.
struct LevelScheme {
  struct Coupling {
    int ground;
    int excited;
    double dipole;
  };
  struct Decay {
    int excited;
    int ground;
    double rate;
  };

  std::vector<int> ground;
  std::vector<int> excited;
  std::vector<Coupling> couplings;
  std::vector<Decay> decays;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(ground.size() + excited.size()); }
  // 0-based Hilbert-space index of `label`; throws std::invalid_argument when
  // the label is not declared.
  Eigen::Index index_of(int label) const;
  LevelScheme without_decays() const;
};

/// Three ground sublevels |1>,|2>,|3> (m = -1, 0, +1) and three excited
/// sublevels |4>,|5>,|6> (m' = -1, 0, +1). The drive couples 2<->5 and 3<->6.
/// Allowed decays, each excited level having total rate `decay_rate`:
/// 5 -> {1, 2, 3}, 6 -> {2, 3}, 4 -> {1, 2}, with equal branching. A zero
/// rate leaves the decay list empty.
LevelScheme default_pumping_scheme(double decay_rate = 1.0);

// Throws std::invalid_argument on undeclared or duplicate labels, non-positive
// rates or couplings that do not connect a ground to an excited level.
void check_scheme(const LevelScheme& scheme);

/// Rotating-frame model: H0 = detuning on each excited level, a single control
/// H1 = sum over couplings of (dipole / 2)(|g><e| + |e><g|) driven with the
/// constant field `rabi`, and decays with their decay-induced dephasing.
struct PumpingModel {
  ControlSystem system;
  RateModel rates;
  double rabi;
};

PumpingModel build_pumping_system(const LevelScheme& scheme, double rabi, double detuning = 0.0);

// diag(1/3, 1/3, 1/3, 0, 0, 0) for the default scheme.
DensityMatrix uniform_ground_mixture(const LevelScheme& scheme);

/// Constant resonant drive of strength `rabi` for `duration`, sampled every
/// `dt_out`.
Trajectory simulate_pumping(const LevelScheme& scheme, double rabi, double duration,
                            const DensityMatrix& rho0, double dt_out,
                            const IntegratorConfig& config = {}, double detuning = 0.0);

// Ground labels without any coupling entry, in declaration order.
std::vector<int> dark_state_check(const LevelScheme& scheme);

}  // namespace dissq
