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

#include <cstddef>
#include <functional>
#include <vector>

namespace dissq {

struct ParameterBounds {
  double lower = 0.0;
  double upper = 1.0;
  double span() const { return upper - lower; }
  double mid() const { return 0.5 * (lower + upper); }
};

struct Evaluation {
  std::vector<double> params;
  double value = 0.0;
};

struct MinimizeResult {
  std::vector<double> best_params;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  bool budget_exhausted = false;
  std::vector<Evaluation> history;  // in evaluation order
};

struct MinimizerConfig {
  std::size_t budget = 200;
  // Convergence when the bracket (golden) or simplex extent (Nelder-Mead),
  // relative to the bound span, drops below xtol.
  double xtol = 1e-6;
  double ftol = 1e-12;
};

using ObjectiveFunction = std::function<double(const std::vector<double>&)>;

/// Golden-section search on [lower, upper]. Deterministic; the first probe is
/// at upper - (upper - lower) / phi.
MinimizeResult golden_section(const ObjectiveFunction& f, ParameterBounds bounds,
                              const MinimizerConfig& config);

/// Nelder-Mead with every trial point clamped into the box. The initial
/// simplex is the box midpoint plus one vertex per axis displaced by 10% of
/// that axis' span.
MinimizeResult nelder_mead(const ObjectiveFunction& f, const std::vector<ParameterBounds>& bounds,
                           const MinimizerConfig& config);

/// Golden section for one parameter, Nelder-Mead otherwise. Throws
/// std::invalid_argument on empty or inverted bounds.
MinimizeResult minimize_bounded(const ObjectiveFunction& f,
                                const std::vector<ParameterBounds>& bounds,
                                const MinimizerConfig& config);

}  // namespace dissq
