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

#include "qsvm/qcore/state_vector.hpp"

#include <cmath>
#include <sstream>

#include "qsvm/error.hpp"

namespace qsvm {
namespace {

constexpr double kConstructionTol = 1e-10;
constexpr double kPropagationTol = 1e-9;

int qubits_for_length(std::size_t n) {
  if (n < 2 || (n & (n - 1)) != 0) {
    std::ostringstream msg;
    msg << "amplitude count " << n << " is not a power of two >= 2";
    throw InvalidArgument(msg.str());
  }
  int q = 0;
  while ((std::size_t{1} << q) < n) ++q;
  if (q > kMaxQubits) throw InvalidArgument("state exceeds the 12-qubit limit");
  return q;
}

double squared_norm(const std::vector<complex>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

void check_norm(const std::vector<complex>& v, double tol) {
  const double n = std::sqrt(squared_norm(v));
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol) {
    std::ostringstream msg;
    msg << "state norm " << n << " differs from 1 by more than " << tol;
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

std::string bitstring(std::size_t index, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if ((index >> (num_qubits - 1 - q)) & 1U) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

std::size_t basis_index(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw InvalidArgument("bitstring length out of range");
  }
  std::size_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("bitstring contains a character other than 0/1");
    idx = (idx << 1) | static_cast<std::size_t>(c == '1');
  }
  return idx;
}

StateVector::StateVector(int num_qubits, std::vector<complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidArgument("qubit count must lie in [1, 12]");
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
  StateVector s(num_qubits);
  if (index >= s.dimension()) throw InvalidArgument("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<complex> amplitudes) {
  const int q = qubits_for_length(amplitudes.size());
  check_norm(amplitudes, kConstructionTol);
  return StateVector(q, std::move(amplitudes));
}

StateVector StateVector::normalized(std::vector<complex> amplitudes) {
  const int q = qubits_for_length(amplitudes.size());
  const double n = std::sqrt(squared_norm(amplitudes));
  if (!std::isfinite(n) || n < 1e-12) throw NumericError("cannot normalize a zero vector");
  for (auto& a : amplitudes) a /= n;
  return StateVector(q, std::move(amplitudes));
}

StateVector StateVector::tensor(const StateVector& other) const {
  const int q = num_qubits_ + other.num_qubits_;
  if (q > kMaxQubits) throw InvalidArgument("tensor product exceeds the 12-qubit limit");
  std::vector<complex> out;
  out.reserve(dimension() * other.dimension());
  for (const auto& a : amplitudes_) {
    for (const auto& b : other.amplitudes_) out.push_back(a * b);
  }
  return StateVector(q, std::move(out));
}

complex StateVector::amplitude(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(num_qubits_)) {
    throw InvalidArgument("bitstring length does not match the register");
  }
  return amplitudes_[basis_index(bits)];
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
  return p;
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

double overlap_magnitude(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw InvalidArgument("states differ in size");
  complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return std::abs(s);
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dimension() != b.dimension()) return false;
  complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a.amplitude(i)) * b.amplitude(i);
  const complex phase = std::abs(s) > 1e-15 ? s / std::abs(s) : complex{1.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (std::abs(a.amplitude(i) * phase - b.amplitude(i)) > tol) return false;
  }
  return true;
}

StateBuilder::StateBuilder(const StateVector& start)
    : num_qubits_(start.num_qubits()), amplitudes_(start.amplitudes().begin(), start.amplitudes().end()) {}

StateVector StateBuilder::build() && {
  check_norm(amplitudes_, kPropagationTol);
  return StateVector(num_qubits_, std::move(amplitudes_));
}

}  // namespace qsvm
