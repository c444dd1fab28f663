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

#ifndef QSVM_QCORE_DENSITY_HPP
#define QSVM_QCORE_DENSITY_HPP

#include <Eigen/Dense>

#include "qsvm/qcore/state_vector.hpp"

namespace qsvm {

/// Single-qubit density matrix: Hermitian, unit trace, positive
/// semidefinite, each within 1e-9.
class DensityMatrix2 {
 public:
  explicit DensityMatrix2(const Eigen::Matrix2cd& entries);

  [[nodiscard]] const Eigen::Matrix2cd& entries() const noexcept { return entries_; }
  [[nodiscard]] complex operator()(int row, int col) const { return entries_(row, col); }
  [[nodiscard]] double trace() const { return entries_.trace().real(); }

 private:
  Eigen::Matrix2cd entries_;
};

/// Partial trace of |psi><psi| over every qubit except `keep_qubit`.
DensityMatrix2 reduced_density_matrix(const StateVector& state, int keep_qubit);

}  // namespace qsvm

#endif  // QSVM_QCORE_DENSITY_HPP
