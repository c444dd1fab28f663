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

#ifndef QSVM_CIRCUITS_BUILDERS_HPP
#define QSVM_CIRCUITS_BUILDERS_HPP

#include <array>
#include <numbers>
#include <span>
#include <utility>

#include "qsvm/qcore/circuit.hpp"
#include "qsvm/qcore/state_vector.hpp"

namespace qsvm::circuits {

/// Index-register oracle over M = 2 training angles: H on the index qubit
/// (q0), then a 0-controlled and a 1-controlled Ry(2 theta_i) on the data
/// qubit (q1), each as four elementary gates. Depth 9.
Circuit build_oracle_original(std::array<double, 2> angles);

/// Same construction for M = 2 or 4: log2(M) index qubits under H, then
/// one pattern-controlled Ry(2 theta_i) per index value. M = 4 uses the
/// 10-gate doubly-controlled rotation. Throws for other M.
Circuit build_oracle_original_generalized(std::span<const double> angles);

/// One Ry(2 theta_i) per qubit, no entanglement. Depth 1.
Circuit build_oracle_new(std::span<const double> angles);

/// Angles for the two controlled-H(theta) gates of the optimized HHL
/// circuit. The ancilla amplitude for eigenvalue lambda ends up as C/lambda
/// with C = lambda_small, so the small-eigenvalue branch rotates fully.
std::pair<double, double> hhl_rotation_angles(double lambda_small = 0.5, double lambda_large = 1.5);

struct HhlOptions {
  double theta_r1 = 0.0;
  double theta_r2 = 0.0;
  /// Emit the two X gates that cancel across the part A / part B seam.
  bool keep_cancelling_x = false;
  /// Lower controlled-H(theta) to single-qubit unitaries around a CNOT.
  bool lower_controlled_h = false;

  static HhlOptions defaults();
};

/// Optimized 4-qubit HHL circuit for F = [[1, .5], [.5, 1]].
///
/// Roles: q0 carries |y> on entry, q0 q1 then hold the eigenvalue
/// register, q2 the solution, q3 the ancilla. The answer is read from
/// |0001> and |0011>. Depth 7.
Circuit build_hhl_optimized(const HhlOptions& options = HhlOptions::defaults());

/// |y / |y|> (x) |000>, the input the optimized HHL circuit expects.
StateVector hhl_input_state(std::array<double, 2> y);

struct BaselineParams {
  /// |q2> is prepared as Ry(2 input_angle)|0>, so -pi/4 encodes (1, -1).
  double input_angle = -std::numbers::pi / 4.0;
  double rot_a = 0.0;
  double rot_b = 0.0;
  double evolution_time = 0.0;
  /// Matrix exponentiated by the controlled evolution: [[d, o], [o, d]].
  double diag = 1.0;
  double off_diag = 0.5;

  static BaselineParams defaults();
};

/// Textbook-style 4-qubit HHL used as the comparison baseline: state
/// preparation on q2, two-qubit phase estimation on q0 q1, eigenvalue
/// inversion onto q3, then uncomputation. Measured qubit: q2. Depth 18.
Circuit build_baseline_qsvm(const BaselineParams& params = BaselineParams::defaults());

/// H(q0), CNOT(q0, q1), ..., CNOT(q_{n-2}, q_{n-1}).
Circuit build_ghz(int num_qubits);

}  // namespace qsvm::circuits

#endif  // QSVM_CIRCUITS_BUILDERS_HPP
