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

#include "qsvm/qcore/density.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

#include "qsvm/error.hpp"

namespace qsvm {

DensityMatrix2::DensityMatrix2(const Eigen::Matrix2cd& entries) : entries_(entries) {
  constexpr double tol = 1e-9;
  if (!entries_.allFinite()) throw NumericError("density matrix has non-finite entries");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw NumericError("density matrix is not Hermitian");
  }
  const complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr.real() << " is not 1";
    throw NumericError(msg.str());
  }
  const Eigen::Matrix2cd herm = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(herm, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) throw NumericError("density matrix is not positive semidefinite");
}

DensityMatrix2 reduced_density_matrix(const StateVector& state, int keep_qubit) {
  const int n = state.num_qubits();
  if (keep_qubit < 0 || keep_qubit >= n) throw InvalidArgument("kept qubit out of range");
  const int shift = n - 1 - keep_qubit;
  const std::size_t bit = std::size_t{1} << shift;
  const auto amps = state.amplitudes();
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  // Pair each index with bit cleared against its partner with bit set.
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    const complex a0 = amps[i];
    const complex a1 = amps[i | bit];
    rho(0, 0) += a0 * std::conj(a0);
    rho(0, 1) += a0 * std::conj(a1);
    rho(1, 0) += a1 * std::conj(a0);
    rho(1, 1) += a1 * std::conj(a1);
  }
  return DensityMatrix2(rho);
}

}  // namespace qsvm
