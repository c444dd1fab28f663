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

#ifndef QSVM_CIRCUITS_COUPLING_HPP
#define QSVM_CIRCUITS_COUPLING_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsvm/qcore/circuit.hpp"

namespace qsvm::circuits {

/// Directed device connectivity plus a placement of circuit qubits.
class CouplingMap {
 public:
  CouplingMap(int num_physical_qubits, std::set<std::pair<int, int>> directed_edges,
              std::vector<int> logical_to_physical);

  /// Five-qubit bow-tie device; edges point control -> target.
  static CouplingMap ibmqx2(std::vector<int> logical_to_physical);

  /// Placement used for the optimized HHL circuit: q0->Q2, q1->Q1,
  /// q2->Q0, q3->Q3.
  static std::vector<int> hhl_placement();

  [[nodiscard]] int num_physical_qubits() const noexcept { return num_physical_; }
  [[nodiscard]] const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<int>& placement() const noexcept { return placement_; }
  [[nodiscard]] bool allows(int physical_control, int physical_target) const;

 private:
  int num_physical_;
  std::set<std::pair<int, int>> edges_;
  std::vector<int> placement_;
};

struct CouplingViolation {
  std::size_t gate_index;
  std::string gate;
  int physical_control;
  int physical_target;
  bool reversed_edge_exists;
  std::string message;
};

/// Every 2-qubit gate whose (control, target) does not land on a directed
/// edge. Throws InvalidArgument for a circuit qubit without placement and
/// for 3-qubit gates (decompose them first).
std::vector<CouplingViolation> validate_coupling(const Circuit& circuit, const CouplingMap& map);

}  // namespace qsvm::circuits

#endif  // QSVM_CIRCUITS_COUPLING_HPP
