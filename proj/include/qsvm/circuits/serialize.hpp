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

#ifndef QSVM_CIRCUITS_SERIALIZE_HPP
#define QSVM_CIRCUITS_SERIALIZE_HPP

#include "json.hpp"

#include "qsvm/qcore/circuit.hpp"

namespace qsvm::circuits {

/// {"num_qubits", "label", "measured", "gates": [{"tag", "targets",
/// "params"[, "matrix"]}]}. Explicit matrices are stored row-major as
/// [re, im] pairs.
nlohmann::json to_json(const Circuit& circuit);

Circuit circuit_from_json(const nlohmann::json& doc);

}  // namespace qsvm::circuits

#endif  // QSVM_CIRCUITS_SERIALIZE_HPP
