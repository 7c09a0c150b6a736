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

#include "dissq/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dissq {

namespace {

class Recorder {
 public:
  Recorder(const ObjectiveFunction& f, std::size_t budget) : f_(f), budget_(budget) {}

  bool exhausted() const { return result_.evaluations >= budget_; }

  double operator()(const std::vector<double>& x) {
    const double v = f_(x);
    ++result_.evaluations;
    result_.history.push_back({x, v});
    if (result_.evaluations == 1 || v < result_.best_value) {
      result_.best_value = v;
      result_.best_params = x;
    }
    return v;
  }

  MinimizeResult finish(bool converged) {
    result_.budget_exhausted = !converged;
    return std::move(result_);
  }

 private:
  const ObjectiveFunction& f_;
  std::size_t budget_;
  MinimizeResult result_;
};

void check_bounds(const std::vector<ParameterBounds>& bounds) {
  if (bounds.empty()) throw std::invalid_argument("optimizer: no free parameters");
  for (const ParameterBounds& b : bounds) {
    if (!std::isfinite(b.lower) || !std::isfinite(b.upper) || !(b.lower < b.upper)) {
      throw std::invalid_argument("optimizer: infeasible bounds [" + std::to_string(b.lower) +
                                  ", " + std::to_string(b.upper) + "]");
    }
  }
}

}  // namespace

MinimizeResult golden_section(const ObjectiveFunction& f, ParameterBounds bounds,
                              const MinimizerConfig& config) {
  check_bounds({bounds});
  if (config.budget == 0) throw std::invalid_argument("optimizer: budget must be positive");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = config.xtol * bounds.span();
  Recorder eval(f, config.budget);

  double a = bounds.lower, b = bounds.upper;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval({c});
  if (eval.exhausted()) return eval.finish(false);
  double fd = eval({d});
  while (b - a > tol) {
    if (eval.exhausted()) return eval.finish(false);
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval({c});
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval({d});
    }
  }
  return eval.finish(true);
}

MinimizeResult nelder_mead(const ObjectiveFunction& f, const std::vector<ParameterBounds>& bounds,
                           const MinimizerConfig& config) {
  check_bounds(bounds);
  if (config.budget == 0) throw std::invalid_argument("optimizer: budget must be positive");
  const std::size_t n = bounds.size();
  Recorder eval(f, config.budget);

  auto clamp = [&](std::vector<double> x) {
    for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], bounds[i].lower, bounds[i].upper);
    return x;
  };

  std::vector<std::vector<double>> simplex;
  std::vector<double> values;
  std::vector<double> mid(n);
  for (std::size_t i = 0; i < n; ++i) mid[i] = bounds[i].mid();
  simplex.push_back(mid);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v = mid;
    v[i] += 0.1 * bounds[i].span();
    simplex.push_back(clamp(v));
  }
  for (const auto& v : simplex) {
    if (eval.exhausted()) return eval.finish(false);
    values.push_back(eval(v));
  }

  auto combine = [&](const std::vector<double>& base, const std::vector<double>& toward,
                     double coeff) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = base[i] + coeff * (toward[i] - base[i]);
    return clamp(x);
  };

  while (true) {
    std::vector<std::size_t> order(n + 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s2;
    std::vector<double> v2;
    for (std::size_t k : order) {
      s2.push_back(simplex[k]);
      v2.push_back(values[k]);
    }
    simplex.swap(s2);
    values.swap(v2);

    double extent = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        extent = std::max(extent, std::abs(simplex[k][i] - simplex[0][i]) / bounds[i].span());
      }
    }
    if (extent <= config.xtol || values[n] - values[0] <= config.ftol) return eval.finish(true);
    if (eval.exhausted()) return eval.finish(false);

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);
    }
    const std::vector<double> reflected = combine(centroid, simplex[n], -1.0);
    const double fr = eval(reflected);

    if (fr < values[0]) {
      if (eval.exhausted()) {
        simplex[n] = reflected;
        values[n] = fr;
        continue;
      }
      const std::vector<double> expanded = combine(centroid, simplex[n], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[n] = expanded;
        values[n] = fe;
      } else {
        simplex[n] = reflected;
        values[n] = fr;
      }
    } else if (fr < values[n - 1]) {
      simplex[n] = reflected;
      values[n] = fr;
    } else {
      if (eval.exhausted()) continue;
      const bool outside = fr < values[n];
      const std::vector<double> contracted =
          outside ? combine(centroid, reflected, 0.5) : combine(centroid, simplex[n], 0.5);
      const double fcon = eval(contracted);
      if (fcon < std::min(fr, values[n])) {
        simplex[n] = contracted;
        values[n] = fcon;
      } else {
        for (std::size_t k = 1; k <= n; ++k) {
          if (eval.exhausted()) break;
          simplex[k] = combine(simplex[0], simplex[k], 0.5);
          values[k] = eval(simplex[k]);
        }
      }
    }
  }
}

MinimizeResult minimize_bounded(const ObjectiveFunction& f,
                                const std::vector<ParameterBounds>& bounds,
                                const MinimizerConfig& config) {
  check_bounds(bounds);
  if (bounds.size() == 1) return golden_section(f, bounds.front(), config);
  return nelder_mead(f, bounds, config);
}

}  // namespace dissq
