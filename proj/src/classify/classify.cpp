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

#include "qsvm/classify/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsvm/error.hpp"
#include "qsvm/metrics/metrics.hpp"

namespace qsvm {
namespace {

constexpr double kTiny = 1e-9;
constexpr double kPi = std::numbers::pi;

void require_register(int n, int expected, const char* what) {
  if (n != expected) {
    std::ostringstream msg;
    msg << what << " expects a " << expected << "-qubit register, got " << n;
    throw InvalidArgument(msg.str());
  }
}

AlphaReadout finish(double a1, double a2, bool ancilla_empty) {
  AlphaReadout r{a1, a2, false, {}};
  if (std::abs(a1) < kTiny && std::abs(a2) < kTiny) throw NumericError("readout amplitudes vanish");
  if (ancilla_empty) {
    r.degenerate = true;
    r.warning = "ancilla carries no population; the readout does not encode a solution";
  } else if (std::abs(a1) < kTiny) {
    r.degenerate = true;
    r.warning = "alpha1 vanishes";
  } else if (std::abs(a2) < kTiny) {
    r.degenerate = true;
    r.warning = "alpha2 vanishes";
  }
  return r;
}

double wrap_2pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  return a < 0.0 ? a + 2.0 * kPi : a;
}

// Smallest angular distance between two directions.
double angular_gap(double a, double b) {
  const double d = std::abs(wrap_2pi(a) - wrap_2pi(b));
  return std::min(d, 2.0 * kPi - d);
}

}  // namespace

SvmModel::SvmModel(double alpha1, double alpha2, std::array<double, 2> train_angles, double gamma)
    : alpha1_(alpha1), alpha2_(alpha2), angles_(train_angles), gamma_(gamma) {
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) throw InvalidArgument("alpha must be finite");
  if (alpha1 == 0.0 && alpha2 == 0.0) throw InvalidArgument("alpha must not be zero");
  if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
}

SvmModel SvmModel::scaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("scale factor must be positive and finite");
  return SvmModel(alpha1_ * lambda, alpha2_ * lambda, angles_, gamma_);
}

AlphaReadout readout_hhl(const StateVector& state) {
  require_register(state.num_qubits(), 4, "HHL readout");
  return finish(std::abs(state.amplitude(0b0001)), -std::abs(state.amplitude(0b0011)), false);
}

AlphaReadout readout_hhl(const Counts& counts) {
  require_register(counts.num_qubits(), 4, "HHL readout");
  const double n = static_cast<double>(counts.shots());
  return finish(std::sqrt(static_cast<double>(counts.count(0b0001)) / n),
                -std::sqrt(static_cast<double>(counts.count(0b0011)) / n), false);
}

AlphaReadout readout_baseline(const StateVector& state) {
  require_register(state.num_qubits(), 4, "baseline readout");
  double a1 = 0.0, a2 = 0.0, ancilla = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    const complex a = state.amplitude(i);
    ((i & 0b0010) ? a2 : a1) += a.real();
    if (i & 0b0001) ancilla += std::norm(a);
  }
  return finish(a1, a2, ancilla < kTiny);
}

AlphaReadout readout_baseline(const Counts& counts) {
  require_register(counts.num_qubits(), 4, "baseline readout");
  const auto f = counts.frequencies();
  double a1 = 0.0, a2 = 0.0, ancilla = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    ((i & 0b0010) ? a2 : a1) += std::sqrt(f[i]);
    if (i & 0b0001) ancilla += f[i];
  }
  return finish(a1, -a2, ancilla < kTiny);
}

double decision_value(const SvmModel& model, double test_angle) {
  const auto& th = model.train_angles();
  return model.alpha1() * std::cos(th[0] - test_angle) + model.alpha2() * std::cos(th[1] - test_angle) +
         model.b();
}

Label classify_point(const SvmModel& model, double test_angle) {
  return sign_label(decision_value(model, test_angle));
}

std::vector<Label> classify_all(const SvmModel& model, std::span<const double> test_angles) {
  std::vector<Label> out;
  out.reserve(test_angles.size());
  for (double t : test_angles) out.push_back(classify_point(model, t));
  return out;
}

DecisionBoundary decision_boundary(const SvmModel& model) {
  const auto& th = model.train_angles();
  const double w1 = model.alpha1() * std::cos(th[0]) + model.alpha2() * std::cos(th[1]);
  const double w2 = model.alpha1() * std::sin(th[0]) + model.alpha2() * std::sin(th[1]);
  const double n = std::hypot(w1, w2);
  if (n < 1e-12) throw NumericError("hyperplane normal vanishes");
  DecisionBoundary b;
  b.normal = {w1 / n, w2 / n};
  b.direction = {-w2 / n, w1 / n};
  b.normal_angle = std::atan2(w2, w1);
  return b;
}

AxisArtifactReport analyze_axis_artifacts(const SvmModel& model, std::span<const UnitPoint> points,
                                          AngleMode mode) {
  AxisArtifactReport rep;
  const DecisionBoundary b = decision_boundary(model);
  const double ray = b.normal_angle + kPi / 2.0;
  // Both axis crossings sit at the same distance from the boundary line.
  rep.wedge_half_width = std::min(angular_gap(0.0, ray), angular_gap(0.0, ray + kPi));

  struct Item {
    double polar;
    Label label;
  };
  std::vector<Item> items;
  items.reserve(points.size());
  for (const auto& p : points) {
    items.push_back({wrap_2pi(std::atan2(p.x2, p.x1)), classify_point(model, angle_for(p, mode))});
  }

  for (double crossing : {0.0, kPi}) {
    std::vector<Label> above, below;
    for (const auto& it : items) {
      if (angular_gap(it.polar, crossing) >= rep.wedge_half_width) continue;
      (it.polar < kPi ? above : below).push_back(it.label);
    }
    for (Label a : above) {
      for (Label c : below) rep.artifact_pairs += a != c ? 1 : 0;
    }
  }

  std::sort(items.begin(), items.end(), [](const Item& l, const Item& r) { return l.polar < r.polar; });
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Label next = items[(i + 1) % items.size()].label;
    rep.sign_changes += items[i].label != next ? 1 : 0;
  }
  return rep;
}

Confusion confusion(std::span<const Label> predicted, std::span<const Label> truth) {
  if (predicted.size() != truth.size()) throw InvalidArgument("prediction and truth lengths differ");
  Confusion c;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const bool p = predicted[i] == Label::kPlus;
    const bool t = truth[i] == Label::kPlus;
    if (p && t) ++c.true_plus;
    else if (p) ++c.false_plus;
    else if (!t) ++c.true_minus;
    else ++c.false_minus;
  }
  return c;
}

std::string classification_csv(std::span<const PreprocessedPoint> points, std::span<const Label> truth,
                               std::span<const Label> predicted) {
  if (points.size() != truth.size() || points.size() != predicted.size()) {
    throw InvalidArgument("report columns differ in length");
  }
  std::ostringstream out;
  out.precision(17);
  out << "index,t1,t2,x1,x2,angle,true_label,predicted_label\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    out << i << ',' << p.raw.t1 << ',' << p.raw.t2 << ',' << p.unit.x1 << ',' << p.unit.x2 << ',' << p.angle
        << ',' << to_int(truth[i]) << ',' << to_int(predicted[i]) << '\n';
  }
  return out.str();
}

nlohmann::json classification_summary(const SvmModel& model, std::span<const Label> truth,
                                      std::span<const Label> predicted) {
  const Confusion c = confusion(predicted, truth);
  const DecisionBoundary b = decision_boundary(model);
  return {{"accuracy", accuracy(predicted, truth)},
          {"confusion",
           {{"true_plus", c.true_plus},
            {"false_plus", c.false_plus},
            {"true_minus", c.true_minus},
            {"false_minus", c.false_minus}}},
          {"alpha", {model.alpha1(), model.alpha2()}},
          {"boundary_normal", {b.normal[0], b.normal[1]}}};
}

}  // namespace qsvm
