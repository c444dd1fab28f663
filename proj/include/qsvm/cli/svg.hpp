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

#ifndef QSVM_CLI_SVG_HPP
#define QSVM_CLI_SVG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qsvm::cli {

struct ScatterPoint {
  double x;
  double y;
  int label;  // +1 or -1
};

/// Minimal scatter plot with optional line through the origin along
/// `line_direction` and optional highlighted points (training data).
std::string scatter_svg(const std::string& title, const std::vector<ScatterPoint>& points,
                        const std::vector<ScatterPoint>& highlighted = {},
                        std::optional<std::array<double, 2>> line_direction = std::nullopt,
                        bool unit_circle = false);

}  // namespace qsvm::cli

#endif  // QSVM_CLI_SVG_HPP
