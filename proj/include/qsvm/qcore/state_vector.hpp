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

#ifndef QSVM_QCORE_STATE_VECTOR_HPP
#define QSVM_QCORE_STATE_VECTOR_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsvm {

using complex = std::complex<double>;

inline constexpr int kMaxQubits = 12;

/// Converts a basis index into its bitstring, qubit 0 first.
///
/// Qubit 0 is the most significant bit of the index, so index 1 of a
/// 4-qubit register is "0001".
std::string bitstring(std::size_t index, int num_qubits);

/// Parses a bitstring such as "0101" back into a basis index.
std::size_t basis_index(std::string_view bits);

/// Dense pure state of up to kMaxQubits qubits.
///
/// Amplitude i belongs to basis state |i>, with qubit 0 as the most
/// significant bit. Instances are immutable; every operation that changes
/// a state returns a new one.
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);

  /// Computational basis state |index>.
  static StateVector basis(int num_qubits, std::size_t index);

  /// Wraps explicit amplitudes. The length must be a power of two and the
  /// norm must be 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<complex> amplitudes);

  /// Same as from_amplitudes but rescales to unit norm first. Rejects
  /// (near) zero vectors.
  static StateVector normalized(std::vector<complex> amplitudes);

  /// Tensor product |this> (x) |other>; `this` supplies the leading qubits.
  [[nodiscard]] StateVector tensor(const StateVector& other) const;

  [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
  [[nodiscard]] std::span<const complex> amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
  [[nodiscard]] complex amplitude(std::string_view bits) const;

  /// Born-rule probabilities |a_i|^2.
  [[nodiscard]] std::vector<double> probabilities() const;

  [[nodiscard]] double norm() const;

 private:
  StateVector(int num_qubits, std::vector<complex> amplitudes);

  int num_qubits_;
  std::vector<complex> amplitudes_;

  friend class StateBuilder;
};

/// |<a|b>|, the quantity that decides equality up to global phase.
double overlap_magnitude(const StateVector& a, const StateVector& b);

/// True when the two states agree up to a global phase within `tol`
/// (max-abs difference after aligning the phase).
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = 1e-9);

/// Mutable amplitude buffer used by the simulator kernels. Converting it to a
/// StateVector re-checks the norm at propagation tolerance.
class StateBuilder {
 public:
  explicit StateBuilder(const StateVector& start);

  [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
  std::vector<complex>& amplitudes() noexcept { return amplitudes_; }
  [[nodiscard]] const std::vector<complex>& amplitudes() const noexcept { return amplitudes_; }

  [[nodiscard]] StateVector build() &&;

 private:
  int num_qubits_;
  std::vector<complex> amplitudes_;
};

}  // namespace qsvm

#endif  // QSVM_QCORE_STATE_VECTOR_HPP
