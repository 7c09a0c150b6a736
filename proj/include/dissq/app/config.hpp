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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dissq/control.hpp"
#include "dissq/dynamics.hpp"
#include "dissq/propagation.hpp"
#include "dissq/pumping.hpp"

namespace dissq::app {

// Unparseable or incomplete run configuration. The message names the line
// or the [section] key at fault.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { simulate, optimize, pump, check };
enum class SystemKind { two_level, matrix, pumping };
enum class RateUnit { per_period, omega };

struct OptimizeSettings {
  Objective objective;
  std::vector<FreeParameter> free;
  MinimizerConfig search;
  double naive_area = kPi / 2.0;
};

struct PumpSettings {
  LevelScheme scheme;
  double rabi = 1.0;
  double detuning = 0.0;
  double duration = 0.0;  // internal time units
  double dt_out = 0.0;
  bool decays = true;
};

/// Fully resolved run description. Every time and rate is already in
/// internal units (hbar = 1, angular frequencies, time in 1/omega); the file
/// format expresses times in periods 2 pi / omega.
struct RunConfig {
  Scenario scenario = Scenario::simulate;
  std::uint64_t seed = 1;

  SystemKind kind = SystemKind::two_level;
  double omega = 1.0;  // reference angular frequency defining the period
  TwoLevelSystem two_level;
  std::optional<ControlSystem> system;  // as simulated, frame already applied
  Frame frame = Frame::rwa;

  RateUnit rate_unit = RateUnit::per_period;
  std::optional<RateModel> rates;

  DensityMatrix initial = DensityMatrix::basis(2, 0);
  std::vector<PulseSpec> pulses;
  IntegratorConfig integrator;

  double duration = 0.0;
  double dt_out = 0.0;

  OptimizeSettings optimize;
  PumpSettings pump;

  std::filesystem::path output_directory = ".";
  std::string prefix = "run";

  double period() const { return 2.0 * kPi / omega; }
};

/// Parses the INI-style run configuration. Rate models are only checked
/// structurally here; complete positivity is left to the consumer so that
/// `check` can report an inconsistent model instead of refusing to load it.
RunConfig parse_config(const std::string& text, const std::string& origin = "<config>");
RunConfig load_config(const std::filesystem::path& path);

// "(re,im) (re,im) ..." row-major, n*n pairs.
Matrix parse_complex_matrix(const std::string& text, Eigen::Index dim);
std::string format_complex_matrix(const Matrix& m);

}  // namespace dissq::app
