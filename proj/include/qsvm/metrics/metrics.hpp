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

#ifndef QSVM_METRICS_METRICS_HPP
#define QSVM_METRICS_METRICS_HPP

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsvm/label.hpp"
#include "qsvm/qcore/simulator.hpp"

namespace qsvm {

/// Probability distribution over an ordered bitstring support.
class ProbDist {
 public:
  ProbDist(std::vector<std::string> support, std::vector<double> probs);

  /// Full 2^n support in index order.
  static ProbDist over_register(int num_qubits, std::vector<double> probs);

  [[nodiscard]] const std::vector<std::string>& support() const noexcept { return support_; }
  [[nodiscard]] const std::vector<double>& probs() const noexcept { return probs_; }
  [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }

 private:
  std::vector<std::string> support_;
  std::vector<double> probs_;
};

/// counts / shots over the full register; absent outcomes get 0.
ProbDist dist_from_counts(const Counts& counts);

/// Born-rule distribution of a state.
ProbDist dist_from_state(const StateVector& state);

/// sum_i p1(i) log2(p1(i) / p2(i)). Terms with p1(i) = 0 contribute 0; a
/// term with p1(i) > 0 and p2(i) = 0 makes the result +infinity. Throws
/// InvalidArgument when the supports differ.
double kl_divergence(const ProbDist& p1, const ProbDist& p2);

/// Jensen-Shannon divergence with base-2 logs; always in [0, 1].
double js_divergence(const ProbDist& p1, const ProbDist& p2);

/// Fraction of positions where predicted == truth. Throws InvalidArgument
/// on empty or mismatched input.
double accuracy(std::span<const Label> predicted, std::span<const Label> truth);

/// {circuit_label, shots, noise_params, js, kl_forward, kl_backward};
/// an infinite KL is written as the string "inf".
nlohmann::json divergence_report(const std::string& circuit_label, std::uint64_t shots, const NoiseModel& noise,
                                 const ProbDist& ideal, const ProbDist& noisy);

}  // namespace qsvm

#endif  // QSVM_METRICS_METRICS_HPP
