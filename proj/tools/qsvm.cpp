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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsvm/cli/commands.hpp"
#include "qsvm/cli/pipeline.hpp"
#include "qsvm/error.hpp"

namespace {

using qsvm::cli::RunConfig;

struct RawOptions {
  std::string dataset = "iris";
  std::string dataset_path;
  std::string angle_mode = "quadrant_aware";
  std::string circuit = "hhl_optimized";
  std::string oracle = "new";
  std::string noise = "none";
  std::optional<double> p1;
  std::optional<double> p2;
  std::optional<double> readout;
};

void add_run_flags(CLI::App* cmd, RawOptions& raw, RunConfig& cfg) {
  cmd->add_option("--dataset", raw.dataset, "iris, ocr, or a path to a CSV file or PBM directory");
  cmd->add_option("--dataset-path", raw.dataset_path, "Override the bundled file for iris or ocr");
  cmd->add_option("--angle-mode", raw.angle_mode)->check(CLI::IsMember({"quadrant_aware", "prior_art"}));
  cmd->add_option("--circuit", raw.circuit)->check(CLI::IsMember({"hhl_optimized", "baseline"}));
  cmd->add_option("--oracle", raw.oracle)->check(CLI::IsMember({"original", "new"}));
  cmd->add_option("--shots", cfg.shots)->check(CLI::PositiveNumber);
  cmd->add_option("--noise", raw.noise, "none or default")->check(CLI::IsMember({"none", "default"}));
  cmd->add_option("--p1", raw.p1, "Single-qubit depolarizing probability")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--p2", raw.p2, "Multi-qubit depolarizing probability")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--readout", raw.readout, "Readout flip probability")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--gamma", cfg.gamma)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Overridden by QSVM_SEED");
  cmd->add_option("--threads", cfg.threads, "0 picks the hardware concurrency");
  cmd->add_option("--output-dir", cfg.output_dir);
}

void finish_config(const RawOptions& raw, RunConfig& cfg) {
  if (const char* env = std::getenv("QSVM_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw qsvm::InvalidArgument(std::string("QSVM_SEED is not an unsigned integer: ") + env);
    }
  }
  if (raw.dataset == "iris") {
    cfg.dataset = qsvm::cli::DatasetKind::kIris;
    cfg.dataset_path = raw.dataset_path;
  } else if (raw.dataset == "ocr") {
    cfg.dataset = qsvm::cli::DatasetKind::kOcr;
    cfg.dataset_path = raw.dataset_path;
  } else {
    cfg.dataset = qsvm::cli::DatasetKind::kCustom;
    cfg.dataset_path = raw.dataset;
  }
  cfg.angle_mode = raw.angle_mode == "prior_art" ? qsvm::AngleMode::kPriorArt : qsvm::AngleMode::kQuadrantAware;
  cfg.circuit = raw.circuit == "baseline" ? qsvm::cli::CircuitKind::kBaseline : qsvm::cli::CircuitKind::kHhlOptimized;
  cfg.oracle = raw.oracle == "original" ? qsvm::cli::OracleKind::kOriginal : qsvm::cli::OracleKind::kNew;
  if (raw.noise == "default" || raw.p1 || raw.p2 || raw.readout) {
    const auto base = qsvm::NoiseModel::defaults(cfg.seed);
    cfg.noise = qsvm::NoiseModel(raw.p1.value_or(base.depolarizing_prob_1q()),
                                 raw.p2.value_or(base.depolarizing_prob_2q()),
                                 raw.readout.value_or(base.readout_flip_prob()), cfg.seed);
  }
  cfg.validate();
}

int fail(int code, const char* kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum LS-SVM simulation pipeline"};
  app.require_subcommand(1);

  RawOptions raw;
  RunConfig cfg;
  auto* pre = app.add_subcommand("preprocess", "Write per-stage CSV and SVG files");
  auto* run = app.add_subcommand("run", "Run the full pipeline and write report.json");
  auto* div = app.add_subcommand("divergence", "Compare noisy and ideal output distributions");
  auto* tab = app.add_subcommand("depth-table", "Print oracle and circuit depths");
  auto* dump = app.add_subcommand("circuit-dump", "Print a built circuit as JSON");
  for (auto* c : {pre, run, div}) add_run_flags(c, raw, cfg);
  int runs = 5;
  div->add_option("--runs", runs, "Runs per median")->check(CLI::PositiveNumber);
  std::string dump_name = "hhl_optimized";
  bool coupling = false;
  dump->add_option("name", dump_name)->check(
      CLI::IsMember({"hhl_optimized", "baseline", "oracle_original", "oracle_new"}));
  dump->add_flag("--coupling", coupling, "Check against the ibmqx2 coupling map");
  bool as_json = false;
  tab->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? qsvm::cli::kExitOk : qsvm::cli::kExitUsage;
  }

  try {
    if (*pre || *run || *div) finish_config(raw, cfg);
    if (*pre) {
      for (const auto& p : qsvm::cli::cmd_preprocess(cfg)) std::cout << p.string() << '\n';
    } else if (*run) {
      std::cout << qsvm::cli::cmd_run(cfg).dump(2) << '\n';
    } else if (*div) {
      qsvm::cli::DivergenceOptions opts;
      opts.runs = runs;
      const auto report = qsvm::cli::cmd_divergence(cfg, opts);
      std::cout << report.dump(2) << '\n';
      if (!report.at("ordering_holds").get<bool>()) {
        return fail(qsvm::cli::kExitNumeric, "ordering", "hhl_optimized JS is not below baseline JS");
      }
    } else if (*tab) {
      const auto t = qsvm::cli::depth_table();
      std::cout << (as_json ? t.dump(2) + "\n" : qsvm::cli::format_depth_table(t));
    } else if (*dump) {
      std::cout << qsvm::cli::cmd_circuit_dump(dump_name, coupling).dump(2) << '\n';
    }
  } catch (const qsvm::InvalidArgument& e) {
    return fail(qsvm::cli::kExitUsage, "usage", e.what());
  } catch (const qsvm::DataError& e) {
    return fail(qsvm::cli::kExitData, "data", e.what());
  } catch (const qsvm::NumericError& e) {
    return fail(qsvm::cli::kExitNumeric, "numeric", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(qsvm::cli::kExitData, "data", e.what());
  }
  return qsvm::cli::kExitOk;
}
