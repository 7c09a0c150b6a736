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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dissq/app/check.hpp"
#include "dissq/app/config.hpp"

namespace dissq::app {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitPhysics = 2, kExitCheck = 3 };

inline constexpr const char* kOutputDirEnv = "DISSQ_OUTPUT_DIR";

struct RunArtifacts {
  // (file name, contents), written together once the whole run succeeded
  std::vector<std::pair<std::string, std::string>> files;
  std::string summary;
  // Only set by check runs.
  std::optional<CheckReport> checks;
};

/// Runs the scenario entirely in memory. Throws ConfigError for inconsistent
/// settings, CompletePositivityError / PropagationError for physics failures.
RunArtifacts execute(const RunConfig& cfg);

// Writes through temporary names and renames, so a failure leaves no partial
// files behind.
void write_artifacts(const RunArtifacts& artifacts, const std::filesystem::path& directory);

/// Full CLI path: load, execute, write, report. `expected` rejects a config
/// whose scenario differs from the subcommand. Returns an ExitCode.
int run(const std::filesystem::path& config_path, std::optional<Scenario> expected,
        std::ostream& out, std::ostream& err);

// `check` without a config file: default two-level parameters.
int run_default_check(std::uint64_t seed, std::ostream& out);

std::string scenario_name(Scenario s);

}  // namespace dissq::app
