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

#include "qsvm/circuits/coupling.hpp"

#include <sstream>

#include "qsvm/error.hpp"

namespace qsvm::circuits {

CouplingMap::CouplingMap(int num_physical_qubits, std::set<std::pair<int, int>> directed_edges,
                         std::vector<int> logical_to_physical)
    : num_physical_(num_physical_qubits),
      edges_(std::move(directed_edges)),
      placement_(std::move(logical_to_physical)) {
  if (num_physical_ < 1) throw InvalidArgument("device needs at least one qubit");
  for (const auto& [c, t] : edges_) {
    if (c < 0 || t < 0 || c >= num_physical_ || t >= num_physical_ || c == t) {
      throw InvalidArgument("coupling edge references an invalid physical qubit");
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(num_physical_), false);
  for (int p : placement_) {
    if (p < 0 || p >= num_physical_) throw InvalidArgument("placement references an invalid physical qubit");
    if (used[static_cast<std::size_t>(p)]) throw InvalidArgument("placement is not injective");
    used[static_cast<std::size_t>(p)] = true;
  }
}

CouplingMap CouplingMap::ibmqx2(std::vector<int> logical_to_physical) {
  return CouplingMap(5, {{1, 0}, {2, 0}, {2, 1}, {2, 3}, {4, 3}, {2, 4}}, std::move(logical_to_physical));
}

std::vector<int> CouplingMap::hhl_placement() { return {2, 1, 0, 3}; }

bool CouplingMap::allows(int physical_control, int physical_target) const {
  return edges_.count({physical_control, physical_target}) != 0;
}

std::vector<CouplingViolation> validate_coupling(const Circuit& circuit, const CouplingMap& map) {
  if (static_cast<int>(map.placement().size()) < circuit.num_qubits()) {
    std::ostringstream msg;
    msg << "circuit qubit " << map.placement().size() << " has no physical placement";
    throw InvalidArgument(msg.str());
  }
  std::vector<CouplingViolation> out;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    if (g.targets.size() == 1) continue;
    if (g.targets.size() > 2) throw InvalidArgument("decompose multi-controlled gates before validation");
    const int pc = map.placement()[static_cast<std::size_t>(g.targets[0])];
    const int pt = map.placement()[static_cast<std::size_t>(g.targets[1])];
    if (map.allows(pc, pt)) continue;
    const bool reversed = map.allows(pt, pc);
    std::ostringstream msg;
    msg << "gate " << i << " (" << gate_name(g.tag) << " q" << g.targets[0] << "->q" << g.targets[1]
        << ") maps to Q" << pc << "->Q" << pt
        << (reversed ? ", which runs against the edge direction" : ", which is not an edge");
    out.push_back({i, std::string(gate_name(g.tag)), pc, pt, reversed, msg.str()});
  }
  return out;
}

}  // namespace qsvm::circuits
