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

#include "dissq/pumping.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dissq {

Eigen::Index LevelScheme::index_of(int label) const {
  auto g = std::find(ground.begin(), ground.end(), label);
  if (g != ground.end()) return static_cast<Eigen::Index>(g - ground.begin());
  auto e = std::find(excited.begin(), excited.end(), label);
  if (e != excited.end()) {
    return static_cast<Eigen::Index>(ground.size()) + static_cast<Eigen::Index>(e - excited.begin());
  }
  throw std::invalid_argument("level scheme: undeclared level " + std::to_string(label));
}

LevelScheme LevelScheme::without_decays() const {
  LevelScheme s = *this;
  s.decays.clear();
  return s;
}

LevelScheme default_pumping_scheme(double decay_rate) {
  LevelScheme s;
  s.ground = {1, 2, 3};
  s.excited = {4, 5, 6};
  s.couplings = {{2, 5, 1.0}, {3, 6, 1.0}};
  if (decay_rate == 0.0) return s;
  const double third = decay_rate / 3.0, half = decay_rate / 2.0;
  s.decays = {{5, 1, third}, {5, 2, third}, {5, 3, third},
              {6, 2, half},  {6, 3, half},
              {4, 1, half},  {4, 2, half}};
  return s;
}

void check_scheme(const LevelScheme& scheme) {
  std::set<int> labels;
  for (int l : scheme.ground) {
    if (!labels.insert(l).second) throw std::invalid_argument("level scheme: duplicate level " + std::to_string(l));
  }
  for (int l : scheme.excited) {
    if (!labels.insert(l).second) throw std::invalid_argument("level scheme: duplicate level " + std::to_string(l));
  }
  if (scheme.ground.empty()) throw std::invalid_argument("level scheme: no ground levels");
  auto is_ground = [&](int l) {
    return std::find(scheme.ground.begin(), scheme.ground.end(), l) != scheme.ground.end();
  };
  auto is_excited = [&](int l) {
    return std::find(scheme.excited.begin(), scheme.excited.end(), l) != scheme.excited.end();
  };
  for (const auto& c : scheme.couplings) {
    if (!is_ground(c.ground) || !is_excited(c.excited)) {
      throw std::invalid_argument("level scheme: coupling " + std::to_string(c.ground) + "-" +
                                  std::to_string(c.excited) + " must join a ground and an excited level");
    }
  }
  for (const auto& d : scheme.decays) {
    if (!is_excited(d.excited) || !is_ground(d.ground)) {
      throw std::invalid_argument("level scheme: decay " + std::to_string(d.excited) + "->" +
                                  std::to_string(d.ground) + " must run from an excited to a ground level");
    }
    if (!(d.rate > 0.0)) throw std::invalid_argument("level scheme: decay rates must be positive");
  }
}

PumpingModel build_pumping_system(const LevelScheme& scheme, double rabi, double detuning) {
  check_scheme(scheme);
  const Eigen::Index n = scheme.dim();
  Matrix h0 = Matrix::Zero(n, n);
  for (int e : scheme.excited) {
    const Eigen::Index k = scheme.index_of(e);
    h0(k, k) = detuning;
  }
  Matrix h1 = Matrix::Zero(n, n);
  for (const auto& c : scheme.couplings) {
    const Eigen::Index g = scheme.index_of(c.ground), e = scheme.index_of(c.excited);
    h1(g, e) += 0.5 * c.dipole;
    h1(e, g) += 0.5 * c.dipole;
  }
  RealMatrix gamma = RealMatrix::Zero(n, n);
  for (const auto& d : scheme.decays) {
    gamma(scheme.index_of(d.ground), scheme.index_of(d.excited)) += d.rate;
  }
  return PumpingModel{ControlSystem(std::move(h0), {std::move(h1)}, {"drive"}),
                      RateModel::with_decay_induced_dephasing(gamma), rabi};
}

DensityMatrix uniform_ground_mixture(const LevelScheme& scheme) {
  RealVector w = RealVector::Zero(scheme.dim());
  for (int g : scheme.ground) w(scheme.index_of(g)) = 1.0 / static_cast<double>(scheme.ground.size());
  return DensityMatrix::diagonal(w);
}

Trajectory simulate_pumping(const LevelScheme& scheme, double rabi, double duration,
                            const DensityMatrix& rho0, double dt_out,
                            const IntegratorConfig& config, double detuning) {
  const PumpingModel model = build_pumping_system(scheme, rabi, detuning);
  if (rho0.dim() != scheme.dim()) throw DimensionError("simulate_pumping: initial state dimension mismatch");
  const Liouvillian l = build_liouvillian(model.system, model.rates);
  return evolve(l, ControlSchedule::constant({rabi}), rho0, duration, dt_out, config);
}

std::vector<int> dark_state_check(const LevelScheme& scheme) {
  std::vector<int> dark;
  for (int g : scheme.ground) {
    const bool driven = std::any_of(scheme.couplings.begin(), scheme.couplings.end(),
                                    [&](const LevelScheme::Coupling& c) { return c.ground == g && c.dipole != 0.0; });
    if (!driven) dark.push_back(g);
  }
  return dark;
}

}  // namespace dissq
