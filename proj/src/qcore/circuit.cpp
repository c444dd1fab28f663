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

#include "qsvm/qcore/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "qsvm/error.hpp"
#include "qsvm/qcore/state_vector.hpp"

namespace qsvm {

int GateApplication::arity() const {
  if (tag == GateTag::kUnitary) {
    if (!matrix) throw InvalidArgument("unitary application carries no matrix");
    return matrix->arity();
  }
  return gate_arity(tag);
}

GateMatrix GateApplication::resolve() const {
  if (tag == GateTag::kUnitary) {
    if (!matrix) throw InvalidArgument("unitary application carries no matrix");
    return *matrix;
  }
  return gate_matrix(tag, params);
}

GateApplication make_gate(GateTag tag, std::vector<int> targets, std::vector<double> params) {
  if (tag == GateTag::kUnitary) throw InvalidArgument("use make_unitary for explicit matrices");
  // Resolving once validates the parameter count and finiteness up front.
  (void)gate_matrix(tag, params);
  GateApplication app{tag, std::move(targets), std::move(params), nullptr};
  if (static_cast<int>(app.targets.size()) != gate_arity(tag)) {
    std::ostringstream msg;
    msg << "gate '" << gate_name(tag) << "' acts on " << gate_arity(tag) << " qubit(s), got "
        << app.targets.size() << " target(s)";
    throw InvalidArgument(msg.str());
  }
  return app;
}

GateApplication make_unitary(GateMatrix matrix, std::vector<int> targets) {
  if (static_cast<int>(targets.size()) != matrix.arity()) {
    throw InvalidArgument("unitary arity does not match target count");
  }
  return GateApplication{GateTag::kUnitary, std::move(targets), {},
                         std::make_shared<const GateMatrix>(std::move(matrix))};
}

void validate_application(const GateApplication& app, int num_qubits) {
  if (static_cast<int>(app.targets.size()) != app.arity()) {
    throw InvalidArgument("target count does not match gate arity");
  }
  for (std::size_t i = 0; i < app.targets.size(); ++i) {
    const int t = app.targets[i];
    if (t < 0 || t >= num_qubits) {
      std::ostringstream msg;
      msg << "target qubit " << t << " out of range for a " << num_qubits << "-qubit register";
      throw InvalidArgument(msg.str());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (app.targets[j] == t) throw InvalidArgument("gate targets must be distinct");
    }
  }
}

Circuit::Circuit(int num_qubits, std::string label) : num_qubits_(num_qubits), label_(std::move(label)) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) throw InvalidArgument("qubit count must lie in [1, 12]");
}

Circuit& Circuit::append(GateApplication app) {
  validate_application(app, num_qubits_);
  gates_.push_back(std::move(app));
  return *this;
}

Circuit& Circuit::append(const std::vector<GateApplication>& apps) {
  for (const auto& a : apps) append(a);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_) throw InvalidArgument("appended circuit is wider than the register");
  return append(other.gates_);
}

Circuit& Circuit::set_measured(std::vector<int> qubits) {
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits_) throw InvalidArgument("measured qubit out of range");
  }
  std::sort(qubits.begin(), qubits.end());
  qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
  measured_ = std::move(qubits);
  return *this;
}

}  // namespace qsvm
