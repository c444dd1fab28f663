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

#include "qsvm/preprocess/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsvm/error.hpp"

namespace qsvm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResidualTol = 1e-6;

double arccot(double z) { return kPi / 2.0 - std::atan(z); }

std::array<double, 4> unit_targets(std::array<double, 4> t) {
  const double n1 = std::hypot(t[0], t[1]);
  const double n2 = std::hypot(t[2], t[3]);
  if (n1 < 1e-12 || n2 < 1e-12) throw InvalidArgument("target vectors must be nonzero");
  return {t[0] / n1, t[1] / n1, t[2] / n2, t[3] / n2};
}

}  // namespace

RawPoint extract_hr_vr(const BinaryImage& image) {
  const int w = image.width();
  const int h = image.height();
  const int half_w = w / 2;
  const int half_h = h / 2;
  std::size_t left = 0, right = 0, upper = 0, lower = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!image.at(x, y)) continue;
      if (x < half_w) ++left;
      if (x >= w - half_w) ++right;
      if (y < half_h) ++upper;
      if (y >= h - half_h) ++lower;
    }
  }
  if (right == 0) throw DataError("right half of the image has no black pixels");
  if (lower == 0) throw DataError("lower half of the image has no black pixels");
  return {static_cast<double>(left) / static_cast<double>(right),
          static_cast<double>(upper) / static_cast<double>(lower)};
}

MappedPoint linear_map(const RawPoint& p, const MappingCoefficients& k) {
  return {k.a * p.t1 + k.b, k.c * p.t2 + k.d};
}

MappedPoint ocr_linear_map(const RawPoint& p) { return linear_map(p, kOcrCoefficients); }

UnitPoint normalize(const MappedPoint& p) {
  const double n = std::hypot(p.v1, p.v2);
  if (!std::isfinite(n) || n < 1e-12) throw NumericError("cannot normalize a (near) zero vector");
  return {p.v1 / n, p.v2 / n};
}

std::vector<std::pair<double, double>> default_cd_schedule() {
  return {{0.95, -0.42}, {1.0, 0.0},  {-1.0, 0.0}, {-0.95, 0.42}, {1.0, 0.5},  {1.0, -0.5},
          {1.0, 1.0},    {1.0, -1.0}, {-1.0, 0.5}, {-1.0, -0.5},  {-1.0, 1.0}, {-1.0, -1.0},
          {0.5, 0.0},    {2.0, 0.0},  {0.5, 1.0},  {2.0, -1.0}};
}

double mapping_residual(const RawPoint& train1, const RawPoint& train2, std::array<double, 4> targets,
                        const MappingCoefficients& k) {
  const auto t = unit_targets(targets);
  const UnitPoint u1 = normalize(linear_map(train1, k));
  const UnitPoint u2 = normalize(linear_map(train2, k));
  return std::max({std::abs(u1.x1 - t[0]), std::abs(u1.x2 - t[1]), std::abs(u2.x1 - t[2]),
                   std::abs(u2.x2 - t[3])});
}

MappingCoefficients solve_mapping_coefficients(const RawPoint& train1, const RawPoint& train2,
                                               std::array<double, 4> targets,
                                               std::span<const std::pair<double, double>> candidates) {
  if (train1.t1 == train2.t1) {
    throw InvalidArgument("training points share their first feature; a and b are undetermined");
  }
  const auto n = unit_targets(targets);
  if (std::abs(n[1]) < 1e-12 || std::abs(n[3]) < 1e-12) {
    throw NumericError("target second components must be nonzero");
  }
  const auto schedule = default_cd_schedule();
  if (candidates.empty()) candidates = schedule;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto [c, d] = candidates[i];
    // Positive scale s with v = s * n on each training point.
    const double s1 = (c * train1.t2 + d) / n[1];
    const double s2 = (c * train2.t2 + d) / n[3];
    if (!(s1 > 0.0) || !(s2 > 0.0)) continue;
    const double v1 = s1 * n[0];
    const double v2 = s2 * n[2];
    MappingCoefficients k;
    k.a = (v1 - v2) / (train1.t1 - train2.t1);
    k.b = v1 - k.a * train1.t1;
    k.c = c;
    k.d = d;
    k.candidate = static_cast<int>(i);
    if (!std::isfinite(k.a) || !std::isfinite(k.b)) continue;
    if (mapping_residual(train1, train2, targets, k) < kResidualTol) return k;
  }
  std::ostringstream msg;
  msg << "no (c, d) candidate out of " << candidates.size() << " gives a positive mapping solution";
  throw NumericError(msg.str());
}

double angle_of(const UnitPoint& p) {
  const double x1 = p.x1;
  const double x2 = p.x2;
  if (x2 == 0.0) return x1 >= 0.0 ? 0.0 : kPi;
  if (x1 == 0.0) return x2 > 0.0 ? kPi / 2.0 : -kPi / 2.0;
  if (x1 > 0.0) return std::atan(x2 / x1);       // quadrants I and IV
  if (x2 > 0.0) return arccot(x1 / x2);          // quadrant II
  return std::atan(x1 / x2);                     // quadrant III
}

double angle_of_prior_art(const UnitPoint& p) {
  if (p.x2 == 0.0) throw NumericError("arccot(x1 / x2) is undefined for x2 = 0");
  return arccot(p.x1 / p.x2);
}

double angle_for(const UnitPoint& p, AngleMode mode) {
  return mode == AngleMode::kQuadrantAware ? angle_of(p) : angle_of_prior_art(p);
}

UnitPoint unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

PreprocessedPoint preprocess_point(const RawPoint& raw, const MappingCoefficients& k, AngleMode mode) {
  PreprocessedPoint out;
  out.raw = raw;
  out.mapped = linear_map(raw, k);
  out.unit = normalize(out.mapped);
  out.angle = angle_for(out.unit, mode);
  return out;
}

}  // namespace qsvm
