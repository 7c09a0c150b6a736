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
#include "dissq/random.hpp"
#include "oracles.hpp"

using namespace dissq;

TEST_CASE("vectorize examples") {
  Matrix r(2, 2);
  r << 0.5, 0.5, 0.5, 0.5;
  Vector expected(4);
  expected << 0.5, 0.5, 0.5, 0.5;
  CHECK(oracle::max_abs(vectorize(DensityMatrix(r)) - expected) == 0.0);

  const double a = 0.3;
  RealVector w(2);
  w << a, 1 - a;
  Vector e2(4);
  e2 << a, 0, 0, 1 - a;
  CHECK(oracle::max_abs(vectorize(DensityMatrix::diagonal(w)) - e2) == 0.0);

  Matrix m(2, 2);
  m << 1, 2, 3, 4;
  const Vector v = vectorize(m);
  CHECK(v(liouville_index(0, 1, 2)) == Complex(2.0));
  CHECK(v(liouville_index(1, 0, 2)) == Complex(3.0));
  CHECK_THROWS(devectorize(Vector::Zero(5)));
}

TEST_CASE("property: vectorize round trip is exact") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_density_matrix(1 + trial % 6, rng);
    CHECK(oracle::max_abs(devectorize(vectorize(rho)).entries() - rho.entries()) == 0.0);
    CHECK(oracle::max_abs(vectorize(rho) - oracle::flatten(rho.entries())) == 0.0);
  }
}

TEST_CASE("two-level drift and dissipation superoperators") {
  const Liouvillian l = build_liouvillian(standard_two_level({0.0, 1.0, 1.0, 1.0}),
                                          RateModel::two_level(0.3, 0.1, 0.5));
  Matrix l0 = Matrix::Zero(4, 4);
  l0(1, 1) = -1.0;
  l0(2, 2) = 1.0;
  CHECK(oracle::max_abs(l.drift - l0) == 0.0);

  Matrix ld = Matrix::Zero(4, 4);
  ld << -0.1, 0, 0, 0.3,
        0, -0.5, 0, 0,
        0, 0, -0.5, 0,
        0.1, 0, 0, -0.3;
  CHECK(oracle::max_abs(l.dissipation - ld) < 1e-15);
}

TEST_CASE("property: generator action matches the commutator oracle") {
  Rng rng(32);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 2 + trial % 4;
    const ControlSystem sys(random_hermitian(n, rng), {random_hermitian(n, rng), random_hermitian(n, rng)});
    const RateModel model = random_cp_rate_model(n, rng, 0.5);
    const Liouvillian l = build_liouvillian(sys, model);
    const std::vector<double> f{normal(rng), normal(rng)};
    const DensityMatrix rho = random_density_matrix(n, rng);
    const Matrix h = sys.drift() + f[0] * sys.controls()[0] + f[1] * sys.controls()[1];
    const Matrix rhs = Complex(0.0, -1.0) * oracle::commutator(h, rho.entries()) +
                       oracle::rate_dissipator(model.gamma(), model.dephasing(), rho.entries());
    CHECK(oracle::max_abs(l.generator(f) * vectorize(rho) - oracle::flatten(rhs)) < 1e-12);
  }
}

TEST_CASE("property: rate and Lindblad superoperators coincide") {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 4;
    const RateModel model = random_cp_rate_model(n, rng);
    CHECK(oracle::max_abs(rate_superoperator(model) -
                          lindblad_superoperator(rates_to_lindblad(model), n)) < 1e-12);
  }
}

TEST_CASE("property: generator annihilates the trace functional") {
  Rng rng(34);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const ControlSystem sys(random_hermitian(n, rng), {random_hermitian(n, rng)});
    const Liouvillian l = build_liouvillian(sys, random_cp_rate_model(n, rng));
    const std::vector<double> f{normal(rng)};
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(n * n);
    for (Eigen::Index k = 0; k < n; ++k) row(liouville_index(k, k, n)) = 1.0;
    CHECK((row * l.generator(f)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("property: generator preserves Hermiticity") {
  Rng rng(35);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 4;
    const ControlSystem sys(random_hermitian(n, rng), {random_hermitian(n, rng)});
    const Liouvillian l = build_liouvillian(sys, random_cp_rate_model(n, rng));
    const std::vector<double> f{normal(rng)};
    // G(X^dag) = G(X)^dag for an arbitrary (non-Hermitian) X
    Matrix x = random_hermitian(n, rng) + kI * random_hermitian(n, rng) + random_hermitian(n, rng) * random_hermitian(n, rng);
    const Matrix gx = devectorize(l.generator(f) * vectorize(x)).entries();
    const Matrix gxd = devectorize(l.generator(f) * vectorize(Matrix(x.adjoint()))).entries();
    CHECK(oracle::max_abs(gxd - gx.adjoint()) < 1e-12);
  }
}

TEST_CASE("support disjointness") {
  Rng rng(36);
  std::uniform_real_distribution<double> u(0.05, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double g12 = u(rng), g21 = u(rng);
    const Liouvillian l = build_liouvillian(standard_two_level({0.0, u(rng), u(rng), u(rng)}),
                                            RateModel::two_level(g12, g21, 0.5 * (g12 + g21) + u(rng)));
    CHECK(support_disjointness(l).disjoint);
  }

  Liouvillian forced = build_liouvillian(standard_two_level({0.0, 1.0, 1.0, 1.0}),
                                         RateModel::two_level(0.2, 0.1, 0.3));
  forced.controls[0] = forced.dissipation;
  const DisjointnessReport r = support_disjointness(forced);
  CHECK_FALSE(r.disjoint);
  CHECK(r.overlapping_entries.size() == 6);

  // three-level ladder: reported, not asserted
  Matrix h0 = Matrix::Zero(3, 3);
  h0.diagonal() << 0.0, 1.0, 2.1;
  Matrix h1 = Matrix::Zero(3, 3);
  h1(0, 1) = h1(1, 0) = 1.0;
  h1(1, 2) = h1(2, 1) = 0.8;
  RealMatrix g = RealMatrix::Zero(3, 3);
  g(0, 1) = 0.1;
  g(1, 2) = 0.2;
  const DisjointnessReport ladder =
      support_disjointness(build_liouvillian(ControlSystem(h0, {h1}), RateModel::with_decay_induced_dephasing(g)));
  MESSAGE("three-level ladder disjoint = " << ladder.disjoint << ", overlaps = "
                                           << ladder.overlapping_entries.size());
}

TEST_CASE("cancellation residual") {
  const ControlSystem sys = standard_two_level({0.0, 1.0, 1.0, 1.0});
  Matrix r2(2, 2);
  r2 << 0.5, 0.5, 0.5, 0.5;
  const DensityMatrix rho2(r2);

  CHECK(cancellation_residual(build_liouvillian(sys, RateModel::zero(2)), rho2) == 0.0);

  const double gam = 0.2;
  const Liouvillian deph = build_liouvillian(sys, RateModel::two_level(0.0, 0.0, gam));
  // Least-squares oracle: L1 rho2 and L2 rho2 are orthogonal to i LD rho2,
  // so the residual is |LD rho2| = Gamma * sqrt(2) / 2.
  CHECK(cancellation_residual(deph, rho2) == doctest::Approx(gam / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(cancellation_residual(deph, rho2) > 0.1 * gam);

  RealVector w(2);
  w << 0.3, 0.7;
  CHECK(cancellation_residual(deph, DensityMatrix::diagonal(w)) < 1e-15);

  const Liouvillian no_controls = build_liouvillian(ControlSystem(sys.drift(), {}), RateModel::two_level(0.0, 0.0, gam));
  CHECK(cancellation_residual(no_controls, rho2) == doctest::Approx(gam / std::sqrt(2.0)));
}
