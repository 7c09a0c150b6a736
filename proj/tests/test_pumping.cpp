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

#include "dissq/liouville.hpp"
#include "dissq/pumping.hpp"
#include "dissq/random.hpp"
#include "oracles.hpp"

using namespace dissq;

TEST_CASE("default scheme hamiltonian couples 2-5 and 3-6 only") {
  const PumpingModel m = build_pumping_system(default_pumping_scheme(), 0.8);
  const std::vector<double> f{m.rabi};
  const Matrix h = total_hamiltonian(m.system, f);
  int offdiag = 0;
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = 0; j < 6; ++j)
      if (i != j && std::abs(h(i, j)) > 0.0) ++offdiag;
  CHECK(offdiag == 4);
  CHECK(h(1, 4) == Complex(0.4));
  CHECK(h(2, 5) == Complex(0.4));
  CHECK(hermiticity_defect(h) == 0.0);

  const PumpingModel detuned = build_pumping_system(default_pumping_scheme(), 0.8, 0.3);
  CHECK(detuned.system.drift()(4, 4) == Complex(0.3));
  CHECK(detuned.system.drift()(0, 0) == Complex(0.0));
}

TEST_CASE("default decay channels and decay-induced dephasing") {
  const PumpingModel m = build_pumping_system(default_pumping_scheme(1.5), 1.0);
  const RateModel& r = m.rates;
  CHECK(r.gamma()(0, 4) == doctest::Approx(0.5));
  CHECK(r.gamma()(1, 5) == doctest::Approx(0.75));
  CHECK(r.gamma()(0, 5) == 0.0);
  for (Eigen::Index e = 3; e < 6; ++e) CHECK(r.total_decay(e) == doctest::Approx(1.5));
  CHECK(r.dephasing()(1, 4) == doctest::Approx(0.75));
  CHECK(complete_positivity(r).completely_positive);
  CHECK(build_pumping_system(default_pumping_scheme(0.0), 1.0).rates.is_zero());
}

TEST_CASE("property: pumping generator preserves the trace") {
  Rng rng(51);
  const PumpingModel m = build_pumping_system(default_pumping_scheme(), 1.0);
  const Liouvillian l = build_liouvillian(m.system, m.rates);
  const std::vector<double> f{m.rabi};
  for (int trial = 0; trial < 20; ++trial) {
    const Vector d = l.generator(f) * vectorize(random_density_matrix(6, rng));
    CHECK(std::abs(devectorize(d).trace()) < 1e-12);
  }
}

TEST_CASE("dark states") {
  CHECK(dark_state_check(default_pumping_scheme()) == std::vector<int>{1});
  LevelScheme all = default_pumping_scheme();
  all.couplings.push_back({1, 4, 1.0});
  CHECK(dark_state_check(all).empty());
  LevelScheme none = default_pumping_scheme();
  none.couplings.clear();
  CHECK(dark_state_check(none) == std::vector<int>{1, 2, 3});
}

TEST_CASE("scheme validation") {
  LevelScheme s = default_pumping_scheme();
  s.couplings.push_back({2, 7, 1.0});
  CHECK_THROWS_AS(check_scheme(s), std::invalid_argument);
  s = default_pumping_scheme();
  s.decays.push_back({1, 2, 0.1});  // ground to ground
  CHECK_THROWS_AS(check_scheme(s), std::invalid_argument);
  s = default_pumping_scheme();
  s.decays[0].rate = 0.0;
  CHECK_THROWS_AS(check_scheme(s), std::invalid_argument);
  s = default_pumping_scheme();
  s.excited.push_back(2);
  CHECK_THROWS_AS(check_scheme(s), std::invalid_argument);
  CHECK_THROWS_AS(default_pumping_scheme().index_of(9), std::invalid_argument);
}

TEST_CASE("without decays: paired Rabi cycling at constant entropy") {
  const LevelScheme s = default_pumping_scheme().without_decays();
  const double rabi = 1.0;
  const DensityMatrix rho0 = uniform_ground_mixture(s);
  const Trajectory traj = simulate_pumping(s, rabi, 30.0, rho0, 0.25);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const DensityMatrix& r = traj.states[k];
    const double t = traj.times[k];
    // Rabi oracle for each driven pair, rho_ee = (1/3) sin^2(rabi t / 2)
    const double excited = std::pow(std::sin(rabi * t / 2), 2) / 3.0;
    CHECK(std::abs(r(4, 4).real() - excited) < 1e-7);
    CHECK(std::abs(r(5, 5).real() - excited) < 1e-7);
    CHECK(std::abs(r(1, 1).real() + r(4, 4).real() - 1.0 / 3.0) < 1e-8);
    CHECK(std::abs(r(2, 2).real() + r(5, 5).real() - 1.0 / 3.0) < 1e-8);
    CHECK(std::abs(r(0, 0).real() - 1.0 / 3.0) < 1e-9);
    CHECK(std::abs(traj.purity_deficit[k] - traj.purity_deficit.front()) < 1e-7);
    CHECK(std::abs(r.trace() - 1.0) < 1e-8);
  }
}

TEST_CASE("with decays: population accumulates in the dark state") {
  const LevelScheme s = default_pumping_scheme(1.0);
  const Trajectory traj = simulate_pumping(s, 1.0, 40 * 2 * kPi, uniform_ground_mixture(s), 0.5);
  for (std::size_t k = 1; k < traj.size(); ++k) {
    CHECK(traj.states[k](0, 0).real() >= traj.states[k - 1](0, 0).real() - 1e-9);
    CHECK(std::abs(traj.states[k].trace() - 1.0) < 1e-8);
  }
  CHECK(traj.final_state()(0, 0).real() >= 0.99);
  CHECK(traj.purity_deficit.back() <= 0.02);
}

TEST_CASE("the dark state is stationary") {
  const LevelScheme s = default_pumping_scheme(1.0);
  const Trajectory traj = simulate_pumping(s, 1.0, 20.0, DensityMatrix::basis(6, 0), 1.0);
  for (const DensityMatrix& r : traj.states) CHECK(oracle::max_abs(r.entries() - DensityMatrix::basis(6, 0).entries()) < 1e-12);

  const PumpingModel m = build_pumping_system(s, 1.0);
  const Liouvillian l = build_liouvillian(m.system, m.rates);
  const std::vector<double> f{m.rabi};
  CHECK((l.generator(f) * vectorize(DensityMatrix::basis(6, 0))).norm() < 1e-10);

  // partial population in the dark state stays put with decays off
  RealVector w = RealVector::Zero(6);
  w << 0.5, 0.5, 0, 0, 0, 0;
  const Trajectory mixed = simulate_pumping(s.without_decays(), 1.0, 20.0, DensityMatrix::diagonal(w), 1.0);
  for (const DensityMatrix& r : mixed.states) CHECK(std::abs(r(0, 0).real() - 0.5) < 1e-9);
}

TEST_CASE("simulate_pumping rejects a mismatched initial state") {
  CHECK_THROWS_AS(simulate_pumping(default_pumping_scheme(), 1.0, 1.0, DensityMatrix::basis(2, 0), 0.1),
                  DimensionError);
}
