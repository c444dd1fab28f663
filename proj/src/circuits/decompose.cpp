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

#include "qsvm/circuits/decompose.hpp"

#include <cmath>

#include "qsvm/error.hpp"
#include "qsvm/qcore/simulator.hpp"

namespace qsvm::circuits {
namespace {

void require_bit(int v, const char* what) {
  if (v != 0 && v != 1) throw InvalidArgument(std::string(what) + " must be 0 or 1");
}

double sign_for(int bit) { return bit == 1 ? -1.0 : 1.0; }

}  // namespace

std::vector<GateApplication> decompose_controlled_ry(double theta, int control, int target,
                                                     int active_value) {
  require_bit(active_value, "active control value");
  if (control == target) throw InvalidArgument("control and target must differ");
  const double first = sign_for(active_value) * theta / 2.0;
  return {
      make_gate(GateTag::kCnot, {control, target}),
      make_gate(GateTag::kRy, {target}, {first}),
      make_gate(GateTag::kCnot, {control, target}),
      make_gate(GateTag::kRy, {target}, {theta / 2.0}),
  };
}

std::vector<GateApplication> decompose_cc_ry(double theta, std::array<int, 2> controls, int target,
                                             std::array<int, 2> pattern) {
  require_bit(pattern[0], "control pattern");
  require_bit(pattern[1], "control pattern");
  const auto [c1, c2] = controls;
  if (c1 == c2 || c1 == target || c2 == target) throw InvalidArgument("CC-Ry qubits must be distinct");
  const double q = theta / 4.0;
  const double s1 = sign_for(pattern[0]);
  const double s2 = sign_for(pattern[1]);
  auto a = [&] { return make_gate(GateTag::kCnot, {c1, target}); };
  auto b = [&] { return make_gate(GateTag::kCnot, {c2, target}); };
  auto r = [&](double angle) { return make_gate(GateTag::kRy, {target}, {angle}); };
  return {a(), r(s1 * q), a(), b(), r(s2 * q), a(), r(s1 * s2 * q), a(), b(), r(q)};
}

std::vector<GateApplication> decompose_controlled_h_theta(double theta, int control, int target) {
  if (control == target) throw InvalidArgument("control and target must differ");
  const Eigen::MatrixXcd w =
      gate_matrix(GateTag::kRy, std::array{2.0 * theta}).entries() * gate_matrix(GateTag::kH).entries();
  return {
      make_unitary(GateMatrix(w.adjoint()), {target}),
      make_gate(GateTag::kCnot, {control, target}),
      make_unitary(GateMatrix(w), {target}),
  };
}

Eigen::MatrixXcd unitary_of(const std::vector<GateApplication>& gates, int num_qubits) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(num_qubits, static_cast<std::size_t>(col));
    for (const auto& g : gates) s = apply_gate(s, g);
    for (Eigen::Index row = 0; row < dim; ++row) u(row, col) = s.amplitude(static_cast<std::size_t>(row));
  }
  return u;
}

}  // namespace qsvm::circuits
