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

#include "dissq/app/check.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "dissq/liouville.hpp"
#include "dissq/random.hpp"

namespace dissq::app {

bool CheckReport::all_passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& c) { return c.passed || c.informational; });
}

std::string CheckReport::format() const {
  std::string out;
  for (const CheckItem& c : items) {
    const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    out += fmt::format("{} {}: {}\n", tag, c.name, c.detail);
  }
  out += all_passed() ? "check: all properties passed\n" : "check: FAILED\n";
  return out;
}

CheckInput default_check_input(std::uint64_t seed) {
  return CheckInput{standard_two_level({0.0, 1.0, 1.0, 1.0}),
                    RateModel::two_level(0.05, 0.01, 0.1), Frame::lab, 1.0, {}, seed};
}

namespace {

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Largest |trace(G(f) x)| over unit basis vectors x: the row of the trace
// functional applied to the generator.
double trace_leak(const Liouvillian& l, std::span<const double> f) {
  const Matrix g = l.generator(f);
  Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(g.rows());
  for (Eigen::Index k = 0; k < l.dim; ++k) row(liouville_index(k, k, l.dim)) = 1.0;
  return (row * g).cwiseAbs().maxCoeff();
}

PulseSpec default_pulse(const CheckInput& in) {
  PulseSpec p = PulseSpec::gaussian(kPi / 2.0, 10.0 * 2.0 * kPi / in.omega, in.frame, in.omega);
  p.coupling = std::max(1e-12, in.system.num_controls() ? max_abs(in.system.controls()[0]) : 1.0);
  return p;
}

struct Drift {
  double trace = 0.0;
  double hermiticity = 0.0;
  double min_eigenvalue = 1.0;
  double purity_drift = 0.0;
};

Drift measure(const Trajectory& traj) {
  Drift d;
  const double p0 = traj.purity_deficit.front();
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const ValidationReport r = validate(traj.states[k], 1.0);
    d.trace = std::max(d.trace, r.trace_defect);
    d.hermiticity = std::max(d.hermiticity, r.hermiticity_defect);
    d.min_eigenvalue = std::min(d.min_eigenvalue, r.min_eigenvalue);
    d.purity_drift = std::max(d.purity_drift, std::abs(traj.purity_deficit[k] - p0));
  }
  return d;
}

}  // namespace

CheckReport run_checks(const CheckInput& in) {
  CheckReport report;
  Rng rng(in.seed);
  const Eigen::Index n = in.system.dim();
  const RateModel& rates = in.rates;
  const double rate_scale =
      std::max({1.0, rates.gamma().cwiseAbs().maxCoeff(), rates.dephasing().cwiseAbs().maxCoeff()});

  const PositivityReport cp = complete_positivity(rates);
  report.items.push_back({"complete_positivity", cp.completely_positive, false,
                          fmt::format("min dephasing margin {:.6g}, min Gram eigenvalue {:.6g}",
                                      cp.min_pair_margin, cp.min_gram_eigenvalue)});

  if (cp.completely_positive) {
    const LindbladChannels channels = rates_to_lindblad(rates);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const DensityMatrix rho = random_density_matrix(n, rng);
      worst = std::max(worst, max_abs(dissipator_rates(rates, rho) - dissipator_lindblad(channels, rho)));
    }
    report.items.push_back({"lindblad_equivalence", worst <= 1e-12 * rate_scale, false,
                            fmt::format("max entry deviation {:.3g} over 200 random states", worst)});
    const double super_dev =
        max_abs(rate_superoperator(rates) - lindblad_superoperator(channels, n));
    report.items.push_back({"superoperator_equivalence", super_dev <= 1e-12 * rate_scale, false,
                            fmt::format("max entry deviation {:.3g}", super_dev)});
  } else {
    report.items.push_back({"lindblad_equivalence", false, false,
                            "no Lindblad form exists for a model that violates complete positivity"});
  }

  const Liouvillian l = build_liouvillian(in.system, rates);
  {
    std::uniform_real_distribution<double> uniform(-2.0, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> f(l.num_controls());
      for (double& x : f) x = uniform(rng);
      worst = std::max(worst, trace_leak(l, f));
    }
    report.items.push_back({"trace_preservation", worst <= 1e-12 * rate_scale, false,
                            fmt::format("max |trace row * G(f)| {:.3g} over 20 random fields", worst)});
  }

  {
    const DisjointnessReport dj = support_disjointness(l);
    const bool asserted = n == 2;
    report.items.push_back(
        {"support_disjointness", dj.disjoint, !asserted,
         fmt::format("{} ({} overlapping entries){}", dj.disjoint ? "disjoint" : "overlapping",
                     dj.overlapping_entries.size(), asserted ? "" : "; recorded only for N > 2")});
  }

  if (l.num_controls() > 0 && n >= 2) {
    Vector psi = Vector::Zero(n);
    psi(0) = psi(1) = 1.0 / std::sqrt(2.0);
    const double residual = cancellation_residual(l, from_statevector(psi));
    report.items.push_back({"cancellation_residual", true, true,
                            fmt::format("min_f ||sum f_m L_m rho + i LD rho|| = {:.6g} for (|1>+|2>)/sqrt2",
                                        residual)});
  }

  const std::vector<PulseSpec> pulses = in.pulses.empty() && in.system.num_controls() > 0
                                            ? std::vector<PulseSpec>{default_pulse(in)}
                                            : in.pulses;
  double horizon = 20.0 * 2.0 * kPi / in.omega;
  for (const PulseSpec& p : pulses) horizon = std::max(horizon, p.end());
  const double dt_out = horizon / 200.0;
  // The drift bounds sit near the default integrator tolerance; integrate well below it.
  IntegratorConfig tight;
  tight.rtol = tight.atol = 1e-11;

  if (cp.completely_positive) {
    try {
      const Trajectory traj = evolve(l, pulses, DensityMatrix::basis(n, 0), horizon, dt_out, tight);
      const Drift d = measure(traj);
      report.items.push_back(
          {"open_system_conservation",
           d.trace < 1e-8 && d.hermiticity < 1e-9 && d.min_eigenvalue >= -1e-7, false,
           fmt::format("trace drift {:.3g}, hermiticity defect {:.3g}, min eigenvalue {:.3g}", d.trace,
                       d.hermiticity, d.min_eigenvalue)});
    } catch (const PropagationError& e) {
      report.items.push_back({"open_system_conservation", false, false, e.what()});
    }
  }

  {
    const Liouvillian closed = build_liouvillian(in.system, RateModel::zero(n));
    RealVector w(n);
    for (Eigen::Index k = 0; k < n; ++k) w(k) = static_cast<double>(n - k);
    w /= w.sum();
    try {
      const Trajectory traj = evolve(closed, pulses, DensityMatrix::diagonal(w), horizon, dt_out, tight);
      const Drift d = measure(traj);
      report.items.push_back({"closed_system_purity", d.purity_drift < 1e-8 && d.trace < 1e-8, false,
                              fmt::format("purity deficit drift {:.3g}, trace drift {:.3g}",
                                          d.purity_drift, d.trace)});
    } catch (const PropagationError& e) {
      report.items.push_back({"closed_system_purity", false, false, e.what()});
    }
  }
  return report;
}

}  // namespace dissq::app
