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

#ifndef QSVM_CLASSIFY_CLASSIFY_HPP
#define QSVM_CLASSIFY_CLASSIFY_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsvm/label.hpp"
#include "qsvm/preprocess/preprocess.hpp"
#include "qsvm/qcore/simulator.hpp"
#include "qsvm/qcore/state_vector.hpp"

namespace qsvm {

/// (alpha1, alpha2) recovered from a circuit, plus a flag for readouts
/// that carry no usable information in one component.
struct AlphaReadout {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  bool degenerate = false;
  std::string warning;
};

/// Non-offset LS-SVM: two training angles and their weights; b is 0.
class SvmModel {
 public:
  SvmModel(double alpha1, double alpha2, std::array<double, 2> train_angles, double gamma);

  [[nodiscard]] double alpha1() const noexcept { return alpha1_; }
  [[nodiscard]] double alpha2() const noexcept { return alpha2_; }
  [[nodiscard]] double b() const noexcept { return 0.0; }
  [[nodiscard]] const std::array<double, 2>& train_angles() const noexcept { return angles_; }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }

  /// Both alphas times lambda > 0. Labels are unchanged.
  [[nodiscard]] SvmModel scaled(double lambda) const;

 private:
  double alpha1_;
  double alpha2_;
  std::array<double, 2> angles_;
  double gamma_;
};

/// alpha1 = |a(0001)|, alpha2 = -|a(0011)|. The fixed minus sign assumes
/// the first training point carries label +1. Throws NumericError when both
/// amplitudes are below 1e-9; one vanishing amplitude sets `degenerate`.
AlphaReadout readout_hhl(const StateVector& state);

/// Same convention from a 4-qubit record: magnitudes sqrt(count / shots).
AlphaReadout readout_hhl(const Counts& counts);

/// alpha1 = sum of the eight amplitudes with q2 = 0, alpha2 = sum with
/// q2 = 1 (real parts). Flags `degenerate` when the ancilla q3 carries no
/// population; throws NumericError when both sums vanish.
AlphaReadout readout_baseline(const StateVector& state);

/// Record version: alpha1 = sum sqrt(p) over q2 = 0, alpha2 = -sum sqrt(p)
/// over q2 = 1.
AlphaReadout readout_baseline(const Counts& counts);

/// alpha1 cos(theta1 - theta0) + alpha2 cos(theta2 - theta0).
double decision_value(const SvmModel& model, double test_angle);

/// sgn(decision_value) with sgn(0) = +1.
Label classify_point(const SvmModel& model, double test_angle);

std::vector<Label> classify_all(const SvmModel& model, std::span<const double> test_angles);

/// Hyperplane w . x = 0 with w = alpha1 x1 + alpha2 x2.
struct DecisionBoundary {
  std::array<double, 2> normal;     // unit length
  std::array<double, 2> direction;  // unit vector along the boundary
  double normal_angle = 0.0;        // atan2 of the normal
};

/// Throws NumericError when |w| < 1e-12.
DecisionBoundary decision_boundary(const SvmModel& model);

/// Label changes of the pipeline around the x axis.
struct AxisArtifactReport {
  /// Pairs (above, below the x axis) inside a wedge around 0 or pi that
  /// contains no boundary ray, yet receive different labels.
  std::size_t artifact_pairs = 0;
  /// Label changes walking once around the circle by polar angle.
  std::size_t sign_changes = 0;
  double wedge_half_width = 0.0;
};

/// Classifies every unit point with angle_for(point, mode) and reports
/// labelling splits that do not come from the linear boundary.
AxisArtifactReport analyze_axis_artifacts(const SvmModel& model, std::span<const UnitPoint> points,
                                          AngleMode mode);

struct Confusion {
  std::size_t true_plus = 0;
  std::size_t false_plus = 0;
  std::size_t true_minus = 0;
  std::size_t false_minus = 0;
};

Confusion confusion(std::span<const Label> predicted, std::span<const Label> truth);

/// One row per point: index, t1, t2, x1, x2, angle, true, predicted.
std::string classification_csv(std::span<const PreprocessedPoint> points, std::span<const Label> truth,
                               std::span<const Label> predicted);

/// {accuracy, confusion, alpha, boundary_normal}.
nlohmann::json classification_summary(const SvmModel& model, std::span<const Label> truth,
                                      std::span<const Label> predicted);

}  // namespace qsvm

#endif  // QSVM_CLASSIFY_CLASSIFY_HPP
