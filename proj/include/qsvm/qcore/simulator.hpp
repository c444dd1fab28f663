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

#ifndef QSVM_QCORE_SIMULATOR_HPP
#define QSVM_QCORE_SIMULATOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsvm/qcore/circuit.hpp"
#include "qsvm/qcore/state_vector.hpp"

namespace qsvm {

/// Measurement record over the full register. Stored densely: one slot per
/// basis index.
class Counts {
 public:
  Counts(int num_qubits, std::vector<std::uint64_t> table);

  /// Builds from a sparse bitstring map; absent keys count zero.
  static Counts from_map(int num_qubits, const std::map<std::string, std::uint64_t>& table);

  [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] std::uint64_t shots() const noexcept { return shots_; }
  [[nodiscard]] std::uint64_t count(std::size_t index) const { return table_.at(index); }
  [[nodiscard]] std::uint64_t count(std::string_view bits) const;
  [[nodiscard]] const std::vector<std::uint64_t>& dense() const noexcept { return table_; }

  /// Nonzero entries keyed by bitstring.
  [[nodiscard]] std::map<std::string, std::uint64_t> table() const;

  /// count / shots per basis index.
  [[nodiscard]] std::vector<double> frequencies() const;

  friend bool operator==(const Counts&, const Counts&) = default;

 private:
  int num_qubits_;
  std::uint64_t shots_;
  std::vector<std::uint64_t> table_;
};

/// Depolarizing + readout-flip noise for trajectory simulation.
class NoiseModel {
 public:
  static constexpr double kDefault1q = 0.004;
  static constexpr double kDefault2q = 0.03;
  static constexpr double kDefaultReadout = 0.03;

  NoiseModel(double p1q, double p2q, double readout, std::uint64_t seed);

  static NoiseModel defaults(std::uint64_t seed);
  static NoiseModel noiseless(std::uint64_t seed);

  [[nodiscard]] double depolarizing_prob_1q() const noexcept { return p1q_; }
  [[nodiscard]] double depolarizing_prob_2q() const noexcept { return p2q_; }
  [[nodiscard]] double readout_flip_prob() const noexcept { return readout_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  [[nodiscard]] NoiseModel with_seed(std::uint64_t seed) const;

 private:
  double p1q_;
  double p2q_;
  double readout_;
  std::uint64_t seed_;
};

StateVector apply_gate(const StateVector& state, const GateApplication& app);

/// Applies every gate of `circuit` in order. Throws InvalidArgument when the
/// register sizes differ.
StateVector run_exact(const Circuit& circuit, const StateVector& initial);

/// Ideal projective measurement, `shots` times.
Counts sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// Projective measurement followed by independent per-bit readout flips.
/// Depolarizing rates in `noise` are ignored here.
Counts sample(const StateVector& state, std::uint64_t shots, const NoiseModel& noise);

/// One Monte-Carlo trajectory per shot. Trajectory i draws from its own
/// stream seeded by (noise.seed(), i), so the result does not depend on
/// `threads`. threads == 0 picks the hardware concurrency.
Counts run_noisy(const Circuit& circuit, const StateVector& initial, const NoiseModel& noise,
                 std::uint64_t shots, unsigned threads = 0);

}  // namespace qsvm

#endif  // QSVM_QCORE_SIMULATOR_HPP
