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

#ifndef QSVM_QCORE_GATES_HPP
#define QSVM_QCORE_GATES_HPP

#include <Eigen/Dense>
#include <span>
#include <string>
#include <string_view>

namespace qsvm {

/// Named gates understood by the simulator.
///
/// Multi-qubit gates list their control qubits first, then the target:
/// CNOT(c, t), CCRy(c1, c2, t), and so on.
enum class GateTag {
  kH,
  kX,
  kY,
  kZ,
  kS,
  kSdg,
  kRy,        // Ry(theta) = exp(-i theta Y / 2)
  kHTheta,    // [[cos 2t, sin 2t], [sin 2t, -cos 2t]]
  kCnot,
  kZeroCnot,  // X on the target when the control reads 0
  kCHTheta,
  kCRy,
  kCCRy,
  kCPhase,    // diag(1, 1, 1, e^{i phi})
  kCEvolve,   // controlled exp(i t [[d, o], [o, d]]); params (t, d, o)
  kUnitary,   // explicit matrix carried by the application
};

/// Number of qubits the gate acts on. kUnitary returns 0 (taken from the
/// matrix instead).
int gate_arity(GateTag tag);

/// Number of real parameters the gate expects.
int gate_param_count(GateTag tag);

/// True for CNOT-like gates that a coupling map must see as 2-qubit
/// interactions. Every arity-2 gate qualifies.
bool is_two_qubit(GateTag tag);

std::string_view gate_name(GateTag tag);

/// Inverse of gate_name. Throws InvalidArgument for unknown names.
GateTag gate_from_name(std::string_view name);

/// A 2^k x 2^k unitary. Construction checks U^dagger U = I within 1e-10.
class GateMatrix {
 public:
  explicit GateMatrix(Eigen::MatrixXcd entries);

  [[nodiscard]] int arity() const noexcept { return arity_; }
  [[nodiscard]] const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

  /// Largest |(U^dagger U - I)_ij|.
  [[nodiscard]] double unitarity_error() const;

 private:
  int arity_;
  Eigen::MatrixXcd entries_;
};

/// Exact matrix for a named gate. Throws InvalidArgument for kUnitary,
/// a wrong parameter count or non-finite parameters.
GateMatrix gate_matrix(GateTag tag, std::span<const double> params = {});

/// Max-abs distance between two equally sized matrices after removing the
/// global phase that best aligns them.
double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qsvm

#endif  // QSVM_QCORE_GATES_HPP
