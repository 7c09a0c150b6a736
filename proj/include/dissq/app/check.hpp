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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dissq/dynamics.hpp"
#include "dissq/propagation.hpp"

namespace dissq::app {

struct CheckItem {
  std::string name;
  bool passed = false;
  bool informational = false;  // recorded, never fails the report
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_passed() const;
  std::string format() const;
};

struct CheckInput {
  ControlSystem system;
  RateModel rates;
  Frame frame = Frame::lab;
  double omega = 1.0;
  std::vector<PulseSpec> pulses;  // empty: a default pulse on control 1
  std::uint64_t seed = 1;
};

// Default two-level parameters: E = (0, 1), d = (1, 1), gamma_12 = 0.05,
// gamma_21 = 0.01, Gamma = 0.1 (all in omega units), lab frame.
CheckInput default_check_input(std::uint64_t seed = 1);

/// Complete positivity, rate/Lindblad equivalence (operator and
/// superoperator form), generator trace preservation, control/dissipation
/// support disjointness, cancellation residual, and conservation along
/// open and closed evolutions.
CheckReport run_checks(const CheckInput& input);

}  // namespace dissq::app
