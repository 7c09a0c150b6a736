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

#include "dissq/app/csv.hpp"

#include <cmath>

#include <fmt/format.h>

namespace dissq::app {

namespace {

std::string level_tag(Eigen::Index r, Eigen::Index c, Eigen::Index dim) {
  return dim < 10 ? fmt::format("{}{}", r + 1, c + 1) : fmt::format("{}_{}", r + 1, c + 1);
}

std::string header_comment(const CsvThresholds& th) {
  return fmt::format("# hermiticity_defect_max={} trace_defect_max={} min_eigenvalue_min={}\n",
                     format_number(th.hermiticity), format_number(th.trace),
                     format_number(th.min_eigenvalue));
}

void check_row(const DensityMatrix& rho, double t, const CsvThresholds& th) {
  const ValidationReport r = validate(rho, 1.0);
  if (r.hermiticity_defect > th.hermiticity || r.trace_defect > th.trace ||
      r.min_eigenvalue < th.min_eigenvalue) {
    throw PositivityViolation(
        fmt::format("state at t = {} breaks output thresholds (hermiticity {:.3g}, trace {:.3g}, "
                    "min eigenvalue {:.3g})",
                    t, r.hermiticity_defect, r.trace_defect, r.min_eigenvalue),
        t);
  }
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  return fmt::format("{:.17g}", x);
}

std::string trajectory_csv(const Trajectory& traj, double time_unit, const CsvThresholds& th) {
  std::string out = header_comment(th);
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().dim();
  out += "t";
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::string tag = level_tag(r, c, n);
      out += ",re_rho_" + tag + ",im_rho_" + tag;
    }
  }
  out += ",purity_deficit,renyi_entropy\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const DensityMatrix& rho = traj.states[k];
    check_row(rho, traj.times[k], th);
    out += format_number(traj.times[k] / time_unit);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        out += ',' + format_number(rho(r, c).real()) + ',' + format_number(rho(r, c).imag());
      }
    }
    out += ',' + format_number(traj.purity_deficit[k]) + ',' + format_number(traj.renyi_entropy[k]) + '\n';
  }
  return out;
}

std::string populations_csv(const Trajectory& traj, double time_unit, const CsvThresholds& th) {
  std::string out = header_comment(th);
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().dim();
  out += "t";
  for (Eigen::Index r = 0; r < n; ++r) out += fmt::format(",p_{}", r + 1);
  out += ",purity_deficit,renyi_entropy\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const DensityMatrix& rho = traj.states[k];
    check_row(rho, traj.times[k], th);
    out += format_number(traj.times[k] / time_unit);
    for (Eigen::Index r = 0; r < n; ++r) out += ',' + format_number(rho(r, r).real());
    out += ',' + format_number(traj.purity_deficit[k]) + ',' + format_number(traj.renyi_entropy[k]) + '\n';
  }
  return out;
}

std::string history_csv(const OptResult& result, const std::vector<FreeParameter>& free,
                        double time_unit) {
  std::string out = "evaluation";
  for (const FreeParameter& p : free) {
    out += p.which == PulseParameter::area ? ",area_pi" : "," + parameter_name(p.which);
  }
  out += ",value\n";
  for (std::size_t k = 0; k < result.history.size(); ++k) {
    out += std::to_string(k + 1);
    const Evaluation& e = result.history[k];
    for (std::size_t i = 0; i < free.size(); ++i) {
      const double unit = free[i].which == PulseParameter::area ? kPi : time_unit;
      out += ',' + format_number(e.params[i] / unit);
    }
    out += ',' + format_number(e.value) + '\n';
  }
  return out;
}

}  // namespace dissq::app
