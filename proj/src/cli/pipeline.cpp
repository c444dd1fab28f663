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

#include "qsvm/cli/pipeline.hpp"

#include <cmath>
#include <cstdlib>

#include "qsvm/circuits/builders.hpp"
#include "qsvm/circuits/depth.hpp"
#include "qsvm/data/glyphs.hpp"
#include "qsvm/error.hpp"
#include "qsvm/metrics/metrics.hpp"
#include "qsvm/qcore/density.hpp"

#ifndef QSVM_DATA_DIR
#define QSVM_DATA_DIR "data"
#endif

namespace qsvm::cli {
namespace {

bool is_image_dataset(const RunConfig& c) {
  if (c.dataset == DatasetKind::kOcr) return true;
  return c.dataset == DatasetKind::kCustom && std::filesystem::is_directory(c.dataset_path);
}

StateVector initial_for(CircuitKind k) {
  return k == CircuitKind::kHhlOptimized ? circuits::hhl_input_state({1.0, -1.0}) : StateVector(4);
}

Circuit circuit_for(CircuitKind k) {
  return k == CircuitKind::kHhlOptimized ? circuits::build_hhl_optimized() : circuits::build_baseline_qsvm();
}

KernelMatrix kernel_from_oracle(const RunConfig& cfg, const std::array<double, 2>& angles) {
  if (cfg.oracle == OracleKind::kOriginal) {
    const Circuit c = circuits::build_oracle_original(angles);
    if (!cfg.noise) return kernel_from_density(reduced_density_matrix(run_exact(c, StateVector(2)), 0));
    return kernel_from_density(khat_from_counts(run_noisy(c, StateVector(2), *cfg.noise, cfg.shots, cfg.threads)));
  }
  const Circuit c = circuits::build_oracle_new(angles);
  if (cfg.noise) {
    return khat_from_product_states(
        product_vectors_from_counts(run_noisy(c, StateVector(2), *cfg.noise, cfg.shots, cfg.threads)));
  }
  const StateVector s = run_exact(c, StateVector(2));
  std::vector<std::array<double, 2>> vectors;
  for (int q = 0; q < 2; ++q) {
    const DensityMatrix2 rho = reduced_density_matrix(s, q);
    const double sign = rho(0, 1).real() < 0.0 ? -1.0 : 1.0;
    vectors.push_back({std::sqrt(rho(0, 0).real()), sign * std::sqrt(rho(1, 1).real())});
  }
  return khat_from_product_states(vectors);
}

}  // namespace

void RunConfig::validate() const {
  if (shots == 0) throw InvalidArgument("shots must be positive");
  if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  if (dataset == DatasetKind::kCustom && dataset_path.empty()) {
    throw InvalidArgument("a custom dataset needs a path");
  }
}

std::filesystem::path bundled_data_dir() {
  if (const char* env = std::getenv("QSVM_DATA_DIR"); env && *env) return env;
  return QSVM_DATA_DIR;
}

LabeledDataset load_dataset(const RunConfig& config) {
  config.validate();
  if (is_image_dataset(config)) {
    return load_ocr_images(config.dataset_path.empty() ? bundled_data_dir() / "ocr" : config.dataset_path);
  }
  return load_iris(config.dataset_path.empty() ? bundled_data_dir() / "iris.csv" : config.dataset_path);
}

std::pair<RawPoint, RawPoint> training_points(const RunConfig& config, const LabeledDataset& ds) {
  if (is_image_dataset(config)) return {extract_hr_vr(printed_glyph(6)), extract_hr_vr(printed_glyph(9))};
  return training_points_from_class_means(ds);
}

MappingCoefficients mapping_for(const RunConfig& config, const LabeledDataset&,
                                const std::pair<RawPoint, RawPoint>& train) {
  if (is_image_dataset(config)) return kOcrCoefficients;
  return solve_mapping_coefficients(train.first, train.second, kCanonicalTargets);
}

PipelineResult run_pipeline(const RunConfig& config) {
  config.validate();
  PipelineResult r;
  r.dataset = load_dataset(config);
  const auto train = training_points(config, r.dataset);
  r.coefficients = mapping_for(config, r.dataset, train);
  r.training = {preprocess_point(train.first, r.coefficients, config.angle_mode),
                preprocess_point(train.second, r.coefficients, config.angle_mode)};
  r.test.reserve(r.dataset.size());
  for (const auto& p : r.dataset.points) r.test.push_back(preprocess_point(p, r.coefficients, config.angle_mode));

  const std::array<double, 2> angles{r.training[0].angle, r.training[1].angle};
  r.khat = kernel_from_oracle(config, angles);
  r.f = build_f(r.khat, config.gamma);
  const Eigen::MatrixXd expected = (Eigen::MatrixXd(2, 2) << 1.0, 0.5, 0.5, 1.0).finished();
  if (!r.f.rounded().isApprox(expected)) {
    throw NumericError("rounded F differs from [[1, 0.5], [0.5, 1]]; the circuits encode eigenvalues 0.5 and 1.5 only");
  }

  const Circuit circuit = circuit_for(config.circuit);
  r.circuit_label = circuit.label();
  r.depth = circuits::depth(circuit);
  const StateVector ideal = run_exact(circuit, initial_for(config.circuit));
  if (config.noise) {
    const Counts counts = run_noisy(circuit, initial_for(config.circuit), *config.noise, config.shots, config.threads);
    r.readout = config.circuit == CircuitKind::kHhlOptimized ? readout_hhl(counts) : readout_baseline(counts);
    r.js_vs_ideal = js_divergence(dist_from_state(ideal), dist_from_counts(counts));
  } else {
    r.readout = config.circuit == CircuitKind::kHhlOptimized ? readout_hhl(ideal) : readout_baseline(ideal);
  }
  r.model.emplace(r.readout.alpha1, r.readout.alpha2, angles, config.gamma);

  std::vector<double> test_angles;
  test_angles.reserve(r.test.size());
  for (const auto& p : r.test) test_angles.push_back(p.angle);
  r.predicted = classify_all(*r.model, test_angles);
  r.accuracy = accuracy(r.predicted, r.dataset.labels);

  r.alpha_classical = solve_ls_svm_classical(r.f, Eigen::Vector2d(1.0, -1.0));
  const SvmModel classical(r.alpha_classical(0), r.alpha_classical(1), angles, config.gamma);
  r.predicted_classical = classify_all(classical, test_angles);
  for (std::size_t i = 0; i < r.predicted.size(); ++i) {
    r.classical_mismatches += r.predicted[i] != r.predicted_classical[i] ? 1 : 0;
  }
  return r;
}

nlohmann::json pipeline_report(const RunConfig& config, const PipelineResult& r) {
  nlohmann::json j = classification_summary(*r.model, r.dataset.labels, r.predicted);
  j["dataset"] = r.dataset.name;
  j["points"] = r.dataset.size();
  j["angle_mode"] = to_string(config.angle_mode);
  j["circuit"] = r.circuit_label;
  j["oracle"] = to_string(config.oracle);
  j["depth"] = r.depth;
  j["alpha_degenerate"] = r.readout.degenerate;
  j["alpha_classical"] = {r.alpha_classical(0), r.alpha_classical(1)};
  j["classical_mismatches"] = r.classical_mismatches;
  j["coefficients"] = {{"a", r.coefficients.a}, {"b", r.coefficients.b}, {"c", r.coefficients.c},
                       {"d", r.coefficients.d}, {"candidate", r.coefficients.candidate}};
  j["training_angles"] = {r.training[0].angle, r.training[1].angle};
  j["khat"] = matrix_to_json(r.khat.entries());
  j["F"] = matrix_to_json(r.f.entries());
  j["F_rounded"] = matrix_to_json(r.f.rounded());
  j["gamma"] = config.gamma;
  j["seed"] = config.seed;
  j["shots"] = config.shots;
  if (config.noise) {
    j["noise"] = {{"depolarizing_prob_1q", config.noise->depolarizing_prob_1q()},
                  {"depolarizing_prob_2q", config.noise->depolarizing_prob_2q()},
                  {"readout_flip_prob", config.noise->readout_flip_prob()}};
    j["js_vs_ideal"] = *r.js_vs_ideal;
  } else {
    j["noise"] = nullptr;
  }
  j["warnings"] = r.dataset.warnings;
  return j;
}

std::string to_string(DatasetKind k) {
  switch (k) {
    case DatasetKind::kIris: return "iris";
    case DatasetKind::kOcr: return "ocr";
    case DatasetKind::kCustom: return "custom";
  }
  return "?";
}

std::string to_string(CircuitKind k) { return k == CircuitKind::kHhlOptimized ? "hhl_optimized" : "baseline"; }

std::string to_string(OracleKind k) { return k == OracleKind::kOriginal ? "original" : "new"; }

std::string to_string(AngleMode m) { return m == AngleMode::kQuadrantAware ? "quadrant_aware" : "prior_art"; }

}  // namespace qsvm::cli
