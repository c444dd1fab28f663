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

#ifndef QSVM_CLI_PIPELINE_HPP
#define QSVM_CLI_PIPELINE_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsvm/classify/classify.hpp"
#include "qsvm/data/dataset.hpp"
#include "qsvm/kernelgen/kernel.hpp"
#include "qsvm/preprocess/preprocess.hpp"
#include "qsvm/qcore/simulator.hpp"

namespace qsvm::cli {

enum class DatasetKind { kIris, kOcr, kCustom };
enum class CircuitKind { kHhlOptimized, kBaseline };
enum class OracleKind { kOriginal, kNew };

inline constexpr std::uint64_t kDefaultSeed = 20191015;

/// Unit vectors every training set is mapped onto.
inline constexpr std::array<double, 4> kCanonicalTargets{0.987, 0.159, 0.345, 0.935};

struct RunConfig {
  DatasetKind dataset = DatasetKind::kIris;
  /// Empty: the bundled file (iris) or directory (ocr). For kCustom, an
  /// Iris-format CSV or a directory of PBM digits.
  std::filesystem::path dataset_path;
  AngleMode angle_mode = AngleMode::kQuadrantAware;
  CircuitKind circuit = CircuitKind::kHhlOptimized;
  OracleKind oracle = OracleKind::kNew;
  std::uint64_t shots = 8192;
  /// Absent: exact simulation.
  std::optional<NoiseModel> noise;
  double gamma = kDefaultGamma;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  std::filesystem::path output_dir = "qsvm_out";

  /// Throws InvalidArgument for shots == 0 or gamma <= 0.
  void validate() const;
};

/// Directory holding iris.csv and ocr/.
std::filesystem::path bundled_data_dir();

LabeledDataset load_dataset(const RunConfig& config);

/// Raw training points: class means for CSV data, the printed glyphs for
/// OCR images.
std::pair<RawPoint, RawPoint> training_points(const RunConfig& config, const LabeledDataset& ds);

/// Coefficients of the linear map for this dataset.
MappingCoefficients mapping_for(const RunConfig& config, const LabeledDataset& ds,
                                const std::pair<RawPoint, RawPoint>& train);

struct PipelineResult {
  LabeledDataset dataset;
  MappingCoefficients coefficients;
  std::array<PreprocessedPoint, 2> training;
  std::vector<PreprocessedPoint> test;
  KernelMatrix khat{Eigen::MatrixXd::Identity(2, 2) / 2.0};
  FMatrix f{Eigen::MatrixXd::Identity(2, 2), kDefaultGamma};
  AlphaReadout readout;
  std::optional<SvmModel> model;
  std::vector<Label> predicted;
  double accuracy = 0.0;
  Eigen::VectorXd alpha_classical;
  std::vector<Label> predicted_classical;
  std::size_t classical_mismatches = 0;
  int depth = 0;
  std::string circuit_label;
  std::optional<double> js_vs_ideal;
};

/// Dataset -> preprocessing -> kernel oracle -> F -> HHL circuit -> alpha ->
/// classification, alongside the classical LS-SVM oracle.
PipelineResult run_pipeline(const RunConfig& config);

/// The JSON report written by the run command. Deterministic for a fixed
/// config.
nlohmann::json pipeline_report(const RunConfig& config, const PipelineResult& result);

std::string to_string(DatasetKind k);
std::string to_string(CircuitKind k);
std::string to_string(OracleKind k);
std::string to_string(AngleMode m);

}  // namespace qsvm::cli

#endif  // QSVM_CLI_PIPELINE_HPP
