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

#ifndef QSVM_DATA_DATASET_HPP
#define QSVM_DATA_DATASET_HPP

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qsvm/label.hpp"
#include "qsvm/preprocess/image.hpp"
#include "qsvm/preprocess/preprocess.hpp"

namespace qsvm {

/// Two-feature, two-class dataset.
struct LabeledDataset {
  std::string name;
  std::array<std::string, 2> feature_names;
  std::vector<RawPoint> points;
  std::vector<Label> labels;
  /// Row number or file name each point came from.
  std::vector<std::string> sources;
  /// Non-fatal issues met while loading.
  std::vector<std::string> warnings;

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
  [[nodiscard]] std::size_t count(Label l) const;

  /// Throws DataError unless both classes are present and the columns line up.
  void validate() const;
};

/// Iris CSV with a header naming sepal.length, sepal.width, petal.length,
/// petal.width and species (case, quotes and '_' vs '.' are tolerated;
/// "Iris-setosa" style names too). A headerless file is read in the raw
/// UCI column order. Keeps setosa (+1) and versicolor (-1) with features
/// (sepal.width, petal.length).
LabeledDataset load_iris(const std::filesystem::path& path);

/// Every <digit>_<index>.pbm in `dir` with digit 6 (+1) or 9 (-1), in
/// file-name order, reduced to (HR, VR). Images whose ratios are undefined
/// are skipped with a warning.
LabeledDataset load_ocr_images(const std::filesystem::path& dir);

/// Per-class feature means, +1 class first.
std::pair<RawPoint, RawPoint> training_points_from_class_means(const LabeledDataset& ds);

BinaryImage read_pbm(const std::filesystem::path& path);
BinaryImage parse_pbm(const std::string& text);
std::string format_pbm(const BinaryImage& image);
void write_pbm(const std::filesystem::path& path, const BinaryImage& image);

nlohmann::json dataset_to_json(const LabeledDataset& ds);

}  // namespace qsvm

#endif  // QSVM_DATA_DATASET_HPP
