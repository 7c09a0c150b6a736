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

#include "dissq/app/run.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <system_error>

#include <fmt/format.h>

#include "dissq/app/csv.hpp"
#include "dissq/liouville.hpp"

namespace dissq::app {

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::simulate: return "simulate";
    case Scenario::optimize: return "optimize";
    case Scenario::pump: return "pump";
    case Scenario::check: return "check";
  }
  return "?";
}

namespace {

std::string state_summary(const DensityMatrix& rho, double t_periods) {
  std::string pops;
  for (Eigen::Index k = 0; k < rho.dim(); ++k) {
    pops += (k ? " " : "") + format_number(rho(k, k).real());
  }
  return fmt::format(
      "final_time_periods={}\nfinal_purity={}\nfinal_purity_deficit={}\nfinal_renyi_entropy={}\n"
      "final_populations={}\n",
      format_number(t_periods), format_number(rho.purity()), format_number(purity_deficit(rho)),
      format_number(renyi_entropy(rho)), pops);
}

RunArtifacts execute_simulate(const RunConfig& cfg) {
  require_complete_positivity(*cfg.rates);
  const Liouvillian l = build_liouvillian(*cfg.system, *cfg.rates);
  const Trajectory traj = evolve(l, cfg.pulses, cfg.initial, cfg.duration, cfg.dt_out, cfg.integrator);
  RunArtifacts a;
  a.files.emplace_back(cfg.prefix + "_trajectory.csv", trajectory_csv(traj, cfg.period()));
  a.summary = "scenario=simulate\n" + state_summary(traj.final_state(), traj.final_time() / cfg.period());
  return a;
}

RunArtifacts execute_optimize(const RunConfig& cfg) {
  const OptimizeSettings& o = cfg.optimize;
  const PulseTemplate tmpl{cfg.pulses.front(), o.free};
  const OptResult result = optimize_pulse(*cfg.system, *cfg.rates, cfg.initial, tmpl, o.objective,
                                          o.search, cfg.integrator);
  const PulseSpec best = instantiate(tmpl, result.best_params);
  const double horizon = o.objective.horizon > 0.0 ? std::max(o.objective.horizon, best.end()) : best.end();

  const Liouvillian l = build_liouvillian(*cfg.system, *cfg.rates);
  const std::vector<PulseSpec> pulses{best};
  const Trajectory traj = evolve(l, pulses, cfg.initial, horizon, horizon / 200.0, cfg.integrator);
  const ComparisonRecord cmp = naive_vs_optimized_report(*cfg.system, *cfg.rates, cfg.initial, best,
                                                         o.naive_area, best.effective_area,
                                                         cfg.integrator);

  std::string s = "scenario=optimize\n";
  for (std::size_t i = 0; i < result.names.size(); ++i) {
    const bool area = o.free[i].which == PulseParameter::area;
    const double unit = area ? kPi : cfg.period();
    s += fmt::format("best_{}={}\n", area ? "area_pi" : result.names[i],
                     format_number(result.best_params[i] / unit));
  }
  s += fmt::format("best_value={}\nevaluations={}\nbudget_exhausted={}\n", format_number(result.best_value),
                   result.evaluations, result.budget_exhausted ? "true" : "false");
  s += fmt::format("naive_area_pi={}\nnaive_purity_deficit={}\noptimized_purity_deficit={}\n"
                   "optimized_not_worse={}\n",
                   format_number(cmp.naive_area / kPi), format_number(cmp.naive_purity_deficit),
                   format_number(cmp.optimized_purity_deficit), cmp.optimized_not_worse ? "true" : "false");
  s += state_summary(traj.final_state(), traj.final_time() / cfg.period());

  RunArtifacts a;
  a.files.emplace_back(cfg.prefix + "_history.csv", history_csv(result, o.free, cfg.period()));
  a.files.emplace_back(cfg.prefix + "_best_trajectory.csv", trajectory_csv(traj, cfg.period()));
  a.summary = s;
  return a;
}

RunArtifacts execute_pump(const RunConfig& cfg) {
  const PumpSettings& p = cfg.pump;
  RunArtifacts a;
  const Trajectory closed = simulate_pumping(p.scheme.without_decays(), p.rabi, p.duration, cfg.initial,
                                             p.dt_out, cfg.integrator, p.detuning);
  a.files.emplace_back(cfg.prefix + "_pumping_nodecay.csv", populations_csv(closed, cfg.period()));
  std::string s = "scenario=pump\n";
  s += fmt::format("dark_states={}\n", fmt::join(dark_state_check(p.scheme), " "));
  s += fmt::format("nodecay_final_purity_deficit={}\n", format_number(closed.purity_deficit.back()));
  if (p.decays) {
    const Trajectory open =
        simulate_pumping(p.scheme, p.rabi, p.duration, cfg.initial, p.dt_out, cfg.integrator, p.detuning);
    a.files.emplace_back(cfg.prefix + "_pumping.csv", populations_csv(open, cfg.period()));
    s += state_summary(open.final_state(), open.final_time() / cfg.period());
  } else {
    s += state_summary(closed.final_state(), closed.final_time() / cfg.period());
  }
  a.summary = s;
  return a;
}

RunArtifacts execute_check(const RunConfig& cfg) {
  CheckInput in{*cfg.system, *cfg.rates, cfg.frame, cfg.omega, cfg.pulses, cfg.seed};
  RunArtifacts a;
  a.checks = run_checks(in);
  a.summary = a.checks->format();
  return a;
}

}  // namespace

RunArtifacts execute(const RunConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::simulate: return execute_simulate(cfg);
    case Scenario::optimize: return execute_optimize(cfg);
    case Scenario::pump: return execute_pump(cfg);
    case Scenario::check:
      if (cfg.kind == SystemKind::pumping) throw ConfigError("check does not support the pumping system");
      return execute_check(cfg);
  }
  throw ConfigError("unknown scenario");
}

void write_artifacts(const RunArtifacts& artifacts, const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  if (artifacts.files.empty()) return;
  fs::create_directories(directory);
  std::vector<fs::path> staged;
  try {
    for (const auto& [name, contents] : artifacts.files) {
      const fs::path tmp = directory / (name + ".partial");
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      staged.push_back(tmp);
      out << contents;
      out.close();
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    for (std::size_t k = 0; k < staged.size(); ++k) {
      fs::rename(staged[k], directory / artifacts.files[k].first);
    }
  } catch (...) {
    std::error_code ec;
    for (const fs::path& p : staged) fs::remove(p, ec);
    throw;
  }
}

int run(const std::filesystem::path& config_path, std::optional<Scenario> expected, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = load_config(config_path);
    if (expected && cfg.scenario != *expected) {
      throw ConfigError(fmt::format("{}: scenario is '{}' but the '{}' subcommand was used",
                                    config_path.string(), scenario_name(cfg.scenario),
                                    scenario_name(*expected)));
    }
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) cfg.output_directory = dir;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  RunArtifacts artifacts;
  try {
    artifacts = execute(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CompletePositivityError& e) {
    err << "physics error: " << e.what() << '\n';
    return kExitPhysics;
  } catch (const PropagationError& e) {
    err << "physics error at t = " << e.time() / cfg.period() << " periods: " << e.what() << '\n';
    return kExitPhysics;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    write_artifacts(artifacts, cfg.output_directory);
  } catch (const std::exception& e) {
    err << "output error: " << e.what() << '\n';
    return kExitConfig;
  }
  out << artifacts.summary;
  for (const auto& [name, contents] : artifacts.files) {
    out << "wrote " << (cfg.output_directory / name).string() << '\n';
  }
  if (artifacts.checks && !artifacts.checks->all_passed()) return kExitCheck;
  return kExitOk;
}

int run_default_check(std::uint64_t seed, std::ostream& out) {
  const CheckReport report = run_checks(default_check_input(seed));
  out << report.format();
  return report.all_passed() ? kExitOk : kExitCheck;
}

}  // namespace dissq::app
