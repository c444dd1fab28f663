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

#ifndef QSVM_CIRCUITS_DEPTH_HPP
#define QSVM_CIRCUITS_DEPTH_HPP

#include <cstdint>

#include "qsvm/qcore/circuit.hpp"

namespace qsvm::circuits {

/// Longest path under greedy as-soon-as-possible layering; each gate
/// occupies one layer on every qubit it touches.
int depth(const Circuit& circuit);

/// 3M^2 - 2M + 1 for M a power of two >= 2.
std::int64_t oracle_depth_formula(std::int64_t m);

}  // namespace qsvm::circuits

#endif  // QSVM_CIRCUITS_DEPTH_HPP
