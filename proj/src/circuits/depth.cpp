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

#include "qsvm/circuits/depth.hpp"

#include <algorithm>
#include <vector>

#include "qsvm/error.hpp"

namespace qsvm::circuits {

int depth(const Circuit& circuit) {
  std::vector<int> frontier(static_cast<std::size_t>(circuit.num_qubits()), 0);
  int result = 0;
  for (const auto& g : circuit.gates()) {
    int layer = 0;
    for (int t : g.targets) layer = std::max(layer, frontier[static_cast<std::size_t>(t)]);
    ++layer;
    for (int t : g.targets) frontier[static_cast<std::size_t>(t)] = layer;
    result = std::max(result, layer);
  }
  return result;
}

std::int64_t oracle_depth_formula(std::int64_t m) {
  if (m < 2 || (m & (m - 1)) != 0) throw InvalidArgument("M must be a power of two >= 2");
  return 3 * m * m - 2 * m + 1;
}

}  // namespace qsvm::circuits
