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

#ifndef QSVM_QCORE_CIRCUIT_HPP
#define QSVM_QCORE_CIRCUIT_HPP

#include <memory>
#include <string>
#include <vector>

#include "qsvm/qcore/gates.hpp"

namespace qsvm {

/// One gate placed on specific qubits.
struct GateApplication {
  GateTag tag = GateTag::kH;
  std::vector<int> targets;
  std::vector<double> params;
  /// Set only for kUnitary.
  std::shared_ptr<const GateMatrix> matrix;

  [[nodiscard]] int arity() const;

  /// Resolves the named gate (or the carried matrix) to its unitary.
  [[nodiscard]] GateMatrix resolve() const;
};

GateApplication make_gate(GateTag tag, std::vector<int> targets, std::vector<double> params = {});
GateApplication make_unitary(GateMatrix matrix, std::vector<int> targets);

/// Ordered gate list over a fixed register.
///
/// append() validates every application, so a Circuit never holds an
/// out-of-range or repeated target.
class Circuit {
 public:
  explicit Circuit(int num_qubits, std::string label = {});

  Circuit& append(GateApplication app);
  Circuit& append(const std::vector<GateApplication>& apps);
  Circuit& append(const Circuit& other);

  /// Qubits a readout is expected to look at. Metadata only; simulation
  /// always returns the full register.
  Circuit& set_measured(std::vector<int> qubits);

  [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] const std::vector<GateApplication>& gates() const noexcept { return gates_; }
  [[nodiscard]] const std::vector<int>& measured() const noexcept { return measured_; }
  [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }

 private:
  int num_qubits_;
  std::string label_;
  std::vector<GateApplication> gates_;
  std::vector<int> measured_;
};

/// Checks targets against a register size: count matches arity, each in
/// range, all distinct. Throws InvalidArgument.
void validate_application(const GateApplication& app, int num_qubits);

}  // namespace qsvm

#endif  // QSVM_QCORE_CIRCUIT_HPP
