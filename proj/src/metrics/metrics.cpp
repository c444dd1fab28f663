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

#include "qsvm/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsvm/error.hpp"

namespace qsvm {
namespace {

void require_same_support(const ProbDist& a, const ProbDist& b) {
  if (a.support() != b.support()) throw InvalidArgument("distributions have different supports");
}

nlohmann::json finite_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

}  // namespace

ProbDist::ProbDist(std::vector<std::string> support, std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.size() != probs_.size()) throw InvalidArgument("support and probabilities differ in length");
  if (probs_.empty()) throw InvalidArgument("distribution is empty");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw InvalidArgument("probabilities must be finite and nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidArgument("probabilities do not sum to 1");
}

ProbDist ProbDist::over_register(int num_qubits, std::vector<double> probs) {
  std::vector<std::string> support(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) support[i] = bitstring(i, num_qubits);
  return ProbDist(std::move(support), std::move(probs));
}

ProbDist dist_from_counts(const Counts& counts) {
  return ProbDist::over_register(counts.num_qubits(), counts.frequencies());
}

ProbDist dist_from_state(const StateVector& state) {
  return ProbDist::over_register(state.num_qubits(), state.probabilities());
}

double kl_divergence(const ProbDist& p1, const ProbDist& p2) {
  require_same_support(p1, p2);
  double s = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    const double a = p1.probs()[i];
    const double b = p2.probs()[i];
    if (a == 0.0) continue;
    if (b == 0.0) return std::numeric_limits<double>::infinity();
    s += a * std::log2(a / b);
  }
  return std::max(0.0, s);
}

double js_divergence(const ProbDist& p1, const ProbDist& p2) {
  require_same_support(p1, p2);
  // Written out term by term so the mixture never needs its own validation.
  double s = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    const double a = p1.probs()[i];
    const double b = p2.probs()[i];
    const double m = 0.5 * (a + b);
    if (a > 0.0) s += 0.5 * a * std::log2(a / m);
    if (b > 0.0) s += 0.5 * b * std::log2(b / m);
  }
  return std::clamp(s, 0.0, 1.0);
}

double accuracy(std::span<const Label> predicted, std::span<const Label> truth) {
  if (predicted.empty()) throw InvalidArgument("accuracy of an empty set is undefined");
  if (predicted.size() != truth.size()) throw InvalidArgument("prediction and truth lengths differ");
  std::size_t ok = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) ok += predicted[i] == truth[i] ? 1 : 0;
  return static_cast<double>(ok) / static_cast<double>(predicted.size());
}

nlohmann::json divergence_report(const std::string& circuit_label, std::uint64_t shots, const NoiseModel& noise,
                                 const ProbDist& ideal, const ProbDist& noisy) {
  return {{"circuit_label", circuit_label},
          {"shots", shots},
          {"noise_params",
           {{"depolarizing_prob_1q", noise.depolarizing_prob_1q()},
            {"depolarizing_prob_2q", noise.depolarizing_prob_2q()},
            {"readout_flip_prob", noise.readout_flip_prob()},
            {"seed", noise.seed()}}},
          {"js", js_divergence(ideal, noisy)},
          {"kl_forward", finite_or_inf(kl_divergence(ideal, noisy))},
          {"kl_backward", finite_or_inf(kl_divergence(noisy, ideal))}};
}

}  // namespace qsvm
