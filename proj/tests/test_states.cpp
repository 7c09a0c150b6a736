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

#include "dissq/random.hpp"
#include "dissq/states.hpp"
#include "oracles.hpp"

using namespace dissq;

namespace {

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

const DensityMatrix rho1(m2(0.5, 0.0, 0.0, 0.5));
const DensityMatrix rho2(m2(0.5, 0.5, 0.5, 0.5));

}  // namespace

TEST_CASE("validate accepts the equal mixture and rejects broken states") {
  CHECK(validate(rho1).passed);

  const ValidationReport trace2 = validate(DensityMatrix(m2(1.0, 0.0, 0.0, 1.0)));
  CHECK_FALSE(trace2.passed);
  CHECK(trace2.trace_defect == doctest::Approx(1.0));

  // eigenvalues of [[1,1],[1,0]] from the characteristic polynomial
  const ValidationReport neg = validate(DensityMatrix(m2(1.0, 1.0, 1.0, 0.0)));
  CHECK_FALSE(neg.passed);
  CHECK(neg.min_eigenvalue == doctest::Approx((1.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));

  const ValidationReport herm = validate(DensityMatrix(m2(0.5, Complex(0, 0.1), Complex(0, 0.1), 0.5)));
  CHECK_FALSE(herm.passed);
  CHECK(herm.hermiticity_defect == doctest::Approx(0.2));
}

TEST_CASE("construction requires a square non-empty matrix") {
  CHECK_THROWS_AS(DensityMatrix(Matrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(DensityMatrix(Matrix(0, 0)), DimensionError);
  CHECK_THROWS(DensityMatrix::basis(2, 2));
}

TEST_CASE("purity deficit examples") {
  CHECK(purity_deficit(rho1) == doctest::Approx(0.5));
  CHECK(purity_deficit(rho2) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(purity_deficit(DensityMatrix(m2(0.9, 0.0, 0.0, 0.1))) == doctest::Approx(0.18));
}

TEST_CASE("renyi entropy examples") {
  CHECK(renyi_entropy(rho2) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(renyi_entropy(rho1) == doctest::Approx(std::log(2.0)));
  RealVector w(3);
  w << 0.5, 0.25, 0.25;
  const double sum_sq = 0.25 + 0.0625 + 0.0625;
  CHECK(renyi_entropy(DensityMatrix::diagonal(w)) == doctest::Approx(-std::log(sum_sq)));
  CHECK(sum_sq == doctest::Approx(3.0 / 8.0));
}

TEST_CASE("spectrum of the coherent superposition") {
  const StateSpectrum s = spectrum(rho2);
  CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(std::abs(s.eigenvalues(1)) < 1e-14);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.eigenvectors(0, 0) - Complex(r, 0.0)) < 1e-12);
  CHECK(std::abs(s.eigenvectors(1, 0) - Complex(r, 0.0)) < 1e-12);
}

TEST_CASE("spectrum of a diagonal state is sorted with basis vectors") {
  RealVector w(4);
  w << 0.1, 0.4, 0.2, 0.3;
  const StateSpectrum s = spectrum(DensityMatrix::diagonal(w));
  const int order[] = {1, 3, 2, 0};
  for (int k = 0; k < 4; ++k) {
    CHECK(s.eigenvalues(k) == doctest::Approx(w(order[k])));
    CHECK(std::abs(s.eigenvectors(order[k], k) - 1.0) < 1e-12);
  }
}

TEST_CASE("spectrum rejects non-Hermitian input") {
  CHECK_THROWS_AS(spectrum(DensityMatrix(m2(0.5, 0.3, 0.0, 0.5))), std::invalid_argument);
}

TEST_CASE("from_statevector examples") {
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(oracle::max_abs(from_statevector(plus).entries() - rho2.entries()) < 1e-15);

  Vector ground(2);
  ground << 1.0, 0.0;
  CHECK(oracle::max_abs(from_statevector(ground).entries() - m2(1, 0, 0, 0)) == 0.0);

  Vector circ(2);
  circ << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
  const Matrix expected = m2(0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5);
  CHECK(oracle::max_abs(from_statevector(circ).entries() - expected) < 1e-15);

  Vector bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(from_statevector(bad), std::invalid_argument);
}

TEST_CASE("property: purity bounds and entropy identity on random states") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const DensityMatrix rho = trial % 3 ? random_density_matrix(n, rng) : random_pure_state(n, rng);
    REQUIRE(validate(rho).passed);
    const double p = rho.purity();
    CHECK(p >= 1.0 / n - 1e-12);
    CHECK(p <= 1.0 + 1e-12);
    const double d = purity_deficit(rho);
    CHECK(d >= -1e-12);
    CHECK(d <= 1.0 - 1.0 / n + 1e-12);
    CHECK(renyi_entropy(rho) == -std::log(1.0 - d));
  }
}

TEST_CASE("property: spectrum reconstruction and eigenvalue range") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_density_matrix(2 + trial % 6, rng);
    const StateSpectrum s = spectrum(rho);
    CHECK(s.eigenvalues.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
      CHECK(s.eigenvalues(k) >= -1e-9);
      CHECK(s.eigenvalues(k) <= 1.0 + 1e-9);
      if (k > 0) CHECK(s.eigenvalues(k) <= s.eigenvalues(k - 1));
    }
    CHECK(oracle::max_abs(reconstruct(s).entries() - rho.entries()) < 1e-10);
  }
}

TEST_CASE("property: rank-1 round trip through the top eigenvector") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_pure_state(2 + trial % 5, rng);
    const StateSpectrum s = spectrum(rho);
    const DensityMatrix back = from_statevector(s.eigenvectors.col(0), 1e-9);
    CHECK(oracle::max_abs(back.entries() - rho.entries()) < 1e-10);
    CHECK(std::abs(purity_deficit(back)) < 1e-12);
  }
}
