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

#include "qsvm/circuits/serialize.hpp"

#include "qsvm/error.hpp"

namespace qsvm::circuits {

nlohmann::json to_json(const Circuit& circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : circuit.gates()) {
    nlohmann::json entry{{"tag", gate_name(g.tag)}, {"targets", g.targets}, {"params", g.params}};
    if (g.tag == GateTag::kUnitary) {
      const auto& m = g.matrix->entries();
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
      }
      entry["matrix"] = rows;
    }
    gates.push_back(entry);
  }
  return {{"num_qubits", circuit.num_qubits()},
          {"label", circuit.label()},
          {"measured", circuit.measured()},
          {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json& doc) {
  try {
    Circuit c(doc.at("num_qubits").get<int>(), doc.value("label", std::string{}));
    for (const auto& g : doc.at("gates")) {
      const GateTag tag = gate_from_name(g.at("tag").get<std::string>());
      auto targets = g.at("targets").get<std::vector<int>>();
      if (tag == GateTag::kUnitary) {
        const auto& rows = g.at("matrix");
        const auto n = static_cast<Eigen::Index>(rows.size());
        Eigen::MatrixXcd m(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
          for (Eigen::Index col = 0; col < n; ++col) {
            const auto& e = rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(col));
            m(r, col) = {e.at(0).get<double>(), e.at(1).get<double>()};
          }
        }
        c.append(make_unitary(GateMatrix(m), std::move(targets)));
      } else {
        c.append(make_gate(tag, std::move(targets), g.value("params", std::vector<double>{})));
      }
    }
    if (doc.contains("measured")) c.set_measured(doc.at("measured").get<std::vector<int>>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed circuit document: ") + e.what());
  }
}

}  // namespace qsvm::circuits
