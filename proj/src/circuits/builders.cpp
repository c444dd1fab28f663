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

#include "qsvm/circuits/builders.hpp"

#include <cmath>
#include <string>

#include "qsvm/circuits/decompose.hpp"
#include "qsvm/error.hpp"

namespace qsvm::circuits {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be finite");
}

}  // namespace

Circuit build_oracle_original(std::array<double, 2> angles) {
  Circuit c(2, "oracle_original");
  c.append(make_gate(GateTag::kH, {0}));
  c.append(decompose_controlled_ry(2.0 * angles[0], 0, 1, 0));
  c.append(decompose_controlled_ry(2.0 * angles[1], 0, 1, 1));
  c.set_measured({0, 1});
  return c;
}

Circuit build_oracle_original_generalized(std::span<const double> angles) {
  if (angles.size() == 2) return build_oracle_original({angles[0], angles[1]});
  if (angles.size() != 4) {
    throw InvalidArgument("generalized original oracle is constructed for M = 2 or 4 only");
  }
  Circuit c(3, "oracle_original_m4");
  c.append(make_gate(GateTag::kH, {0}));
  c.append(make_gate(GateTag::kH, {1}));
  for (int idx = 0; idx < 4; ++idx) {
    const std::array<int, 2> pattern{(idx >> 1) & 1, idx & 1};
    c.append(decompose_cc_ry(2.0 * angles[static_cast<std::size_t>(idx)], {0, 1}, 2, pattern));
  }
  c.set_measured({0, 1, 2});
  return c;
}

Circuit build_oracle_new(std::span<const double> angles) {
  if (angles.empty()) throw InvalidArgument("new oracle needs at least one angle");
  Circuit c(static_cast<int>(angles.size()), "oracle_new");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    c.append(make_gate(GateTag::kRy, {static_cast<int>(i)}, {2.0 * angles[i]}));
  }
  std::vector<int> all(angles.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  c.set_measured(all);
  return c;
}

std::pair<double, double> hhl_rotation_angles(double lambda_small, double lambda_large) {
  if (!(lambda_small > 0.0) || !(lambda_large >= lambda_small)) {
    throw InvalidArgument("eigenvalues must satisfy 0 < small <= large");
  }
  const double c = lambda_small;
  // The always-active rotation sets the amplitude of the branch that the
  // second rotation leaves alone; the second one adds the remaining angle.
  const double first = std::asin(c / lambda_large) / 2.0;
  const double second = first + std::asin(c / lambda_small) / 2.0;
  return {first, second};
}

HhlOptions HhlOptions::defaults() {
  HhlOptions o;
  std::tie(o.theta_r1, o.theta_r2) = hhl_rotation_angles();
  return o;
}

Circuit build_hhl_optimized(const HhlOptions& options) {
  require_finite(options.theta_r1, "theta_r1");
  require_finite(options.theta_r2, "theta_r2");
  Circuit c(4, "hhl_optimized");
  // Part A: eigenvalue encoding.
  c.append(make_gate(GateTag::kH, {0}));
  c.append(make_gate(GateTag::kCnot, {0, 1}));
  c.append(make_gate(GateTag::kCnot, {1, 2}));
  c.append(make_gate(GateTag::kZeroCnot, {0, 1}));
  c.append(make_gate(GateTag::kH, {2}));
  if (options.keep_cancelling_x) {
    c.append(make_gate(GateTag::kX, {0}));
    c.append(make_gate(GateTag::kX, {0}));
  }
  // Part B: eigenvalue inversion onto the ancilla.
  auto controlled_h = [&](double theta, int control) {
    if (options.lower_controlled_h) {
      c.append(decompose_controlled_h_theta(theta, control, 3));
    } else {
      c.append(make_gate(GateTag::kCHTheta, {control, 3}, {theta}));
    }
  };
  controlled_h(options.theta_r1, 1);
  controlled_h(options.theta_r2, 0);
  // Part C: inverse encoding.
  c.append(make_gate(GateTag::kH, {1}));
  c.append(make_gate(GateTag::kH, {0}));
  c.set_measured({0, 1, 2, 3});
  return c;
}

StateVector hhl_input_state(std::array<double, 2> y) {
  const StateVector in = StateVector::normalized({y[0], y[1]});
  return in.tensor(StateVector(3));
}

BaselineParams BaselineParams::defaults() {
  BaselineParams p;
  p.input_angle = -kPi / 4.0;
  p.rot_a = kPi;
  p.rot_b = 2.0 * std::asin(1.0 / 3.0) - kPi;
  p.evolution_time = kPi;
  return p;
}

Circuit build_baseline_qsvm(const BaselineParams& p) {
  for (double v : {p.input_angle, p.rot_a, p.rot_b, p.evolution_time, p.diag, p.off_diag}) {
    require_finite(v, "baseline parameter");
  }
  const double t = p.evolution_time;
  auto evolve = [&](double time, int control) {
    return make_gate(GateTag::kCEvolve, {control, 2}, {time, p.diag, p.off_diag});
  };
  Circuit c(4, "baseline_qsvm");
  c.append(make_gate(GateTag::kRy, {2}, {2.0 * p.input_angle}));
  c.append(make_gate(GateTag::kH, {0}));
  c.append(make_gate(GateTag::kH, {1}));
  // Phase estimation.
  c.append(evolve(t, 0));
  c.append(evolve(2.0 * t, 1));
  c.append(make_gate(GateTag::kH, {1}));
  c.append(make_gate(GateTag::kCPhase, {1, 0}, {-kPi / 2.0}));
  c.append(make_gate(GateTag::kH, {0}));
  // Eigenvalue inversion.
  c.append(decompose_controlled_ry(p.rot_a, 1, 3));
  c.append(decompose_controlled_ry(p.rot_b, 0, 3));
  // Uncompute.
  c.append(make_gate(GateTag::kH, {0}));
  c.append(make_gate(GateTag::kCPhase, {1, 0}, {kPi / 2.0}));
  c.append(make_gate(GateTag::kH, {1}));
  c.append(evolve(-2.0 * t, 1));
  c.append(evolve(-t, 0));
  c.append(make_gate(GateTag::kH, {1}));
  c.append(make_gate(GateTag::kH, {0}));
  c.set_measured({2});
  return c;
}

Circuit build_ghz(int num_qubits) {
  Circuit c(num_qubits, "ghz");
  c.append(make_gate(GateTag::kH, {0}));
  for (int q = 0; q + 1 < num_qubits; ++q) c.append(make_gate(GateTag::kCnot, {q, q + 1}));
  return c;
}

}  // namespace qsvm::circuits
