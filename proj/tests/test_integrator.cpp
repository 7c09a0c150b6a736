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

#include <cmath>

#include <doctest.h>

#include "dissq/integrator.hpp"

using namespace dissq;

namespace {

const Complex lambda(-0.5, 2.0);

void linear(double, const Vector& y, Vector& dy) { dy = lambda * y; }

double fixed_step_error(double h) {
  IntegratorConfig cfg;
  cfg.rtol = cfg.atol = 1e6;  // every step accepted
  cfg.max_step = h;
  cfg.initial_step = h;
  DormandPrince45 dp(linear, cfg);
  Vector y = Vector::Ones(1);
  dp.integrate(0.0, 2.0, y);
  return std::abs(y(0) - std::exp(2.0 * lambda));
}

}  // namespace

TEST_CASE("fixed-step convergence order is at least four") {
  const double e1 = fixed_step_error(0.2);
  const double e2 = fixed_step_error(0.1);
  const double e3 = fixed_step_error(0.05);
  MESSAGE("errors " << e1 << " " << e2 << " " << e3);
  CHECK(e1 / e2 >= 16.0);
  CHECK(e2 / e3 >= 16.0);
}

TEST_CASE("adaptive run meets the requested tolerance") {
  for (double tol : {1e-6, 1e-9, 1e-11}) {
    IntegratorConfig cfg;
    cfg.rtol = cfg.atol = tol;
    DormandPrince45 dp(linear, cfg);
    Vector y = Vector::Ones(1);
    dp.integrate(0.0, 5.0, y);
    CHECK(std::abs(y(0) - std::exp(5.0 * lambda)) < 100.0 * tol);
    CHECK(dp.stats().accepted > 0);
  }
}

TEST_CASE("split integration matches a single call") {
  DormandPrince45 a(linear, {});
  DormandPrince45 b(linear, {});
  Vector ya = Vector::Ones(1), yb = Vector::Ones(1);
  a.integrate(0.0, 3.0, ya);
  b.integrate(0.0, 1.3, yb);
  b.integrate(1.3, 3.0, yb);
  CHECK(std::abs(ya(0) - yb(0)) < 1e-8);
}

TEST_CASE("max_step caps the step") {
  IntegratorConfig cfg;
  cfg.max_step = 0.01;
  DormandPrince45 dp(linear, cfg);
  Vector y = Vector::Ones(1);
  dp.integrate(0.0, 1.0, y);
  CHECK(dp.stats().accepted >= 100);
}

TEST_CASE("empty interval is a no-op") {
  DormandPrince45 dp(linear, {});
  Vector y = Vector::Ones(1);
  dp.integrate(1.0, 1.0, y);
  CHECK(y(0) == Complex(1.0));
}

TEST_CASE("step-size underflow and step budget are reported with the time") {
  IntegratorConfig cfg;
  cfg.min_step = 0.5;
  cfg.rtol = cfg.atol = 1e-12;
  DormandPrince45 stiff([](double, const Vector& y, Vector& dy) { dy = -1e4 * y; }, cfg);
  Vector y = Vector::Ones(1);
  CHECK_THROWS_AS(stiff.integrate(0.0, 10.0, y), StepSizeUnderflow);

  IntegratorConfig budget;
  budget.max_steps = 5;
  budget.max_step = 0.01;
  budget.initial_step = 0.01;
  DormandPrince45 dp(linear, budget);
  Vector z = Vector::Ones(1);
  try {
    dp.integrate(0.0, 1.0, z);
    FAIL("expected StepSizeUnderflow");
  } catch (const StepSizeUnderflow& e) {
    CHECK(e.time() == doctest::Approx(0.05));
  }
}

TEST_CASE("nonlinear right-hand side") {
  // y' = i y |y|^2 keeps |y| fixed and rotates the phase at rate |y|^2
  DormandPrince45 dp([](double, const Vector& y, Vector& dy) { dy = kI * y * std::norm(y(0)); }, {});
  Vector y(1);
  y << Complex(0.0, 2.0);
  dp.integrate(0.0, 1.0, y);
  CHECK(std::abs(y(0) - Complex(0.0, 2.0) * std::exp(Complex(0.0, 4.0))) < 1e-7);
}
