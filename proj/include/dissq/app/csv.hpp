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

#include <string>

#include "dissq/control.hpp"
#include "dissq/propagation.hpp"

namespace dissq::app {

// Every CSV row is checked against these before it is written; they are
// also recorded in the file's comment header.
struct CsvThresholds {
  double hermiticity = 1e-9;
  double trace = 1e-8;
  double min_eigenvalue = -1e-7;
};

// 17 significant digits, '.' decimal separator.
std::string format_number(double x);

/// Columns t, re_rho_11, im_rho_11, ..., re_rho_NN, im_rho_NN,
/// purity_deficit, renyi_entropy. Times are divided by `time_unit`.
/// Throws PositivityViolation when a row breaks the thresholds.
std::string trajectory_csv(const Trajectory& traj, double time_unit,
                           const CsvThresholds& thresholds = {});

/// Columns t, p_1, ..., p_N, purity_deficit, renyi_entropy.
std::string populations_csv(const Trajectory& traj, double time_unit,
                            const CsvThresholds& thresholds = {});

/// Columns evaluation, <parameter names>, value. Areas are written in units
/// of pi and durations/widths in units of `time_unit`.
std::string history_csv(const OptResult& result, const std::vector<FreeParameter>& free,
                        double time_unit);

}  // namespace dissq::app
