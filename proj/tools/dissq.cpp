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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dissq/app/run.hpp"

using dissq::app::Scenario;

int main(int argc, char** argv) {
  CLI::App app{"dissq: dissipative control of few-level quantum systems"};
  app.require_subcommand(1);

  std::string config;
  std::uint64_t seed = 1;

  auto add = [&](const char* name, const char* help, bool optional_config) {
    CLI::App* sub = app.add_subcommand(name, help);
    CLI::Option* opt = sub->add_option("config", config, "run configuration file");
    if (!optional_config) opt->required()->check(CLI::ExistingFile);
    return sub;
  };
  CLI::App* simulate = add("simulate", "propagate the master equation under a pulse sequence", false);
  CLI::App* optimize = add("optimize", "search pulse parameters against an objective", false);
  CLI::App* pump = add("pump", "multilevel optical pumping with and without decays", false);
  CLI::App* check = add("check", "self-consistency checks (default two-level model without a config)", true);
  check->add_option("--seed", seed, "random seed when no config is given");
  CLI::App* any = add("run", "run whatever scenario the config selects", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dissq::app::kExitConfig;
  }

  std::optional<Scenario> expected;
  if (*simulate) expected = Scenario::simulate;
  if (*optimize) expected = Scenario::optimize;
  if (*pump) expected = Scenario::pump;
  if (*check) {
    if (config.empty()) return dissq::app::run_default_check(seed, std::cout);
    expected = Scenario::check;
  }
  if (*any) expected.reset();
  return dissq::app::run(config, expected, std::cout, std::cerr);
}
