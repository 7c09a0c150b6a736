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

#include <random>

#include "dissq/dynamics.hpp"
#include "dissq/states.hpp"

namespace dissq {

using Rng = std::mt19937_64;

// Full-rank state A A^dag / Tr(A A^dag) with A a complex Ginibre matrix.
DensityMatrix random_density_matrix(Eigen::Index dim, Rng& rng);
// Rank-1 state from a normalized complex Gaussian vector.
DensityMatrix random_pure_state(Eigen::Index dim, Rng& rng);
// (G + G^dag) / 2, entries of order `scale`.
Matrix random_hermitian(Eigen::Index dim, Rng& rng, double scale = 1.0);

/// Completely positive rate model: decays uniform in [0, max_rate], dephasing
/// equal to the decay-induced floor plus the pure-dephasing rates of random
/// diagonal Lindblad operators.
RateModel random_cp_rate_model(Eigen::Index dim, Rng& rng, double max_rate = 1.0);

}  // namespace dissq
