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

#ifndef QSVM_CIRCUITS_DECOMPOSE_HPP
#define QSVM_CIRCUITS_DECOMPOSE_HPP

#include <array>
#include <vector>

#include "qsvm/qcore/circuit.hpp"

namespace qsvm::circuits {

/// Controlled-Ry(theta) as CNOT, Ry, CNOT, Ry on the target.
///
/// With `active_value` = 1 this is the textbook CNOT, Ry(-theta/2), CNOT,
/// Ry(theta/2). With `active_value` = 0 the rotation fires when the control
/// reads 0, which only flips the sign of the first Ry.
std::vector<GateApplication> decompose_controlled_ry(double theta, int control, int target,
                                                     int active_value = 1);

/// Doubly-controlled Ry(theta) in 10 elementary gates (6 CNOT, 4 Ry).
///
/// `pattern` picks the control values that trigger the rotation; the
/// default (1, 1) is the usual CC-Ry.
std::vector<GateApplication> decompose_cc_ry(double theta, std::array<int, 2> controls, int target,
                                             std::array<int, 2> pattern = {1, 1});

/// Controlled-H(theta) as a basis change around one CNOT:
/// U(W^dagger) on the target, CNOT, U(W), with W = Ry(2 theta) H.
std::vector<GateApplication> decompose_controlled_h_theta(double theta, int control, int target);

/// Product of the gate list as a 2^n x 2^n matrix (qubit 0 most significant).
Eigen::MatrixXcd unitary_of(const std::vector<GateApplication>& gates, int num_qubits);

}  // namespace qsvm::circuits

#endif  // QSVM_CIRCUITS_DECOMPOSE_HPP
