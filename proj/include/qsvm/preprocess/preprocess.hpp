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

#ifndef QSVM_PREPROCESS_PREPROCESS_HPP
#define QSVM_PREPROCESS_PREPROCESS_HPP

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qsvm/preprocess/image.hpp"

namespace qsvm {

/// Two raw features in dataset units.
struct RawPoint {
  double t1 = 0.0;
  double t2 = 0.0;
};

/// Features after the per-axis linear map.
struct MappedPoint {
  double v1 = 0.0;
  double v2 = 0.0;
};

/// Point on the unit circle.
struct UnitPoint {
  double x1 = 1.0;
  double x2 = 0.0;
};

/// v1 = a t1 + b, v2 = c t2 + d.
struct MappingCoefficients {
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
  double d = 0.0;
  /// Position of (c, d) in the candidate schedule that produced it.
  int candidate = 0;
};

enum class AngleMode { kQuadrantAware, kPriorArt };

/// Horizontal and vertical black-pixel ratios of a glyph:
/// HR = left / right, VR = upper / lower. For odd sizes the middle
/// column (row) belongs to neither half. Throws DataError when a
/// denominator half holds no black pixel.
RawPoint extract_hr_vr(const BinaryImage& image);

/// Fixed map used for OCR features.
inline constexpr MappingCoefficients kOcrCoefficients{1.3, -0.62, 0.95, -0.42, 0};

MappedPoint linear_map(const RawPoint& p, const MappingCoefficients& k);
MappedPoint ocr_linear_map(const RawPoint& p);

/// Scales to unit length. Throws NumericError below 1e-12.
UnitPoint normalize(const MappedPoint& p);

/// (c, d) pairs tried in order by solve_mapping_coefficients.
std::vector<std::pair<double, double>> default_cd_schedule();

/// Finds (a, b, c, d) such that the normalized images of the two training
/// points are the target unit vectors (n1, n2) and (n3, n4).
///
/// For each (c, d) candidate the second components fix the positive
/// scale of each mapped point; a and b then follow from the first
/// components. A candidate is accepted when both scales are positive and
/// all four normalized components match within 1e-6. Targets are
/// rescaled to unit length first.
///
/// Throws InvalidArgument when t1 of both points coincide, NumericError
/// when no candidate yields a positive solution.
MappingCoefficients solve_mapping_coefficients(
    const RawPoint& train1, const RawPoint& train2, std::array<double, 4> targets,
    std::span<const std::pair<double, double>> candidates = {});

/// Largest |normalize(linear_map(train_i)) - target_i| component.
double mapping_residual(const RawPoint& train1, const RawPoint& train2, std::array<double, 4> targets,
                        const MappingCoefficients& k);

/// Encoding angle theta with Ry(2 theta)|0> on the unit circle.
///
/// Quadrant I and IV: atan(x2 / x1). Quadrant II: arccot(x1 / x2) with
/// arccot in (0, pi). Quadrant III: atan(x1 / x2). Axis points map to 0,
/// pi/2, pi and -pi/2.
double angle_of(const UnitPoint& p);

/// Single-formula arccot(x1 / x2) in (0, pi). Points below the x axis land
/// on their antipode. Throws NumericError for x2 == 0.
double angle_of_prior_art(const UnitPoint& p);

double angle_for(const UnitPoint& p, AngleMode mode);

/// (cos theta, sin theta).
UnitPoint unit_from_angle(double theta);

/// Every stage of preprocessing for one point.
struct PreprocessedPoint {
  RawPoint raw;
  MappedPoint mapped;
  UnitPoint unit;
  double angle = 0.0;
};

PreprocessedPoint preprocess_point(const RawPoint& raw, const MappingCoefficients& k, AngleMode mode);

}  // namespace qsvm

#endif  // QSVM_PREPROCESS_PREPROCESS_HPP
