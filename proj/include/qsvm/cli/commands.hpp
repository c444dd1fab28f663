// Copyright 2026 The qsvm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSVM_CLI_COMMANDS_HPP
#define QSVM_CLI_COMMANDS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsvm/cli/pipeline.hpp"

namespace qsvm::cli {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2, kExitNumeric = 3 };

/// Writes raw/mapped/normalized/angles CSVs and one SVG per stage into
/// config.output_dir. Returns the written paths.
std::vector<std::filesystem::path> cmd_preprocess(const RunConfig& config);

/// Runs the pipeline and writes report.json, classification.csv and
/// boundary.svg. Returns the report.
nlohmann::json cmd_run(const RunConfig& config);

struct DivergenceOptions {
  std::vector<double> sweep_levels{0.0, 0.01, 0.03, 0.1};
  int runs = 5;
};

/// JS divergence of both circuits against their ideal distribution under
/// config.noise (defaults when absent), plus a depolarizing sweep with
/// readout noise off. Medians over `runs` seeds.
nlohmann::json cmd_divergence(const RunConfig& config, const DivergenceOptions& options = {});

/// Median JS(ideal, noisy) of one circuit over `runs` seeds derived from
/// noise.seed().
double median_js(CircuitKind circuit, const NoiseModel& noise, std::uint64_t shots, int runs, unsigned threads);

/// Rows for M in {2, 4, 8}: qubits and depth of both oracles, constructed
/// where a builder exists, plus the closed-form depth.
nlohmann::json depth_table();
std::string format_depth_table(const nlohmann::json& table);

/// Circuit document by name: hhl_optimized, baseline, oracle_original,
/// oracle_new, ghz. With `coupling` the optimized HHL is lowered and
/// checked against the five-qubit device map.
nlohmann::json cmd_circuit_dump(const std::string& name, bool coupling);

}  // namespace qsvm::cli

#endif  // QSVM_CLI_COMMANDS_HPP
