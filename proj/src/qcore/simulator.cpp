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

#include "qsvm/qcore/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "qsvm/error.hpp"

namespace qsvm {
namespace {

using Rng = std::mt19937_64;

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

void check_prob(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << what << " must lie in [0, 1], got " << p;
    throw InvalidArgument(msg.str());
  }
}

// In-place application of a k-qubit matrix. targets[0] is the most
// significant bit of the matrix index.
void apply_matrix(std::vector<complex>& amps, int n, const std::vector<int>& targets,
                  const Eigen::MatrixXcd& m) {
  const int k = static_cast<int>(targets.size());
  const std::size_t dim = std::size_t{1} << k;
  std::array<std::size_t, 8> offset{};
  std::size_t mask = 0;
  for (std::size_t l = 0; l < dim; ++l) {
    std::size_t off = 0;
    for (int j = 0; j < k; ++j) {
      if ((l >> (k - 1 - j)) & 1U) off |= std::size_t{1} << (n - 1 - targets[static_cast<std::size_t>(j)]);
    }
    offset[l] = off;
  }
  for (int j = 0; j < k; ++j) mask |= std::size_t{1} << (n - 1 - targets[static_cast<std::size_t>(j)]);

  std::array<complex, 8> in{};
  for (std::size_t base = 0; base < amps.size(); ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < dim; ++l) in[l] = amps[base + offset[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < dim; ++c) {
        acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      }
      amps[base + offset[r]] = acc;
    }
  }
}

// Single-qubit Pauli (1 = X, 2 = Y, 3 = Z) applied in place.
void apply_pauli(std::vector<complex>& amps, int n, int qubit, int pauli) {
  const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
  const complex i{0.0, 1.0};
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & bit) continue;
    complex& a0 = amps[idx];
    complex& a1 = amps[idx | bit];
    switch (pauli) {
      case 1:
        std::swap(a0, a1);
        break;
      case 2: {
        const complex t0 = a0;
        a0 = -i * a1;
        a1 = i * t0;
        break;
      }
      case 3:
        a1 = -a1;
        break;
      default:
        break;
    }
  }
}

std::vector<double> cumulative(const std::vector<double>& p) {
  std::vector<double> cdf(p.size());
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += p[i];
    cdf[i] = s;
  }
  return cdf;
}

std::size_t draw_outcome(const std::vector<double>& cdf, Rng& rng) {
  const double u = uniform01(rng) * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

std::size_t flip_readout(std::size_t outcome, int n, double p, Rng& rng) {
  if (p <= 0.0) return outcome;
  for (int q = 0; q < n; ++q) {
    if (uniform01(rng) < p) outcome ^= std::size_t{1} << (n - 1 - q);
  }
  return outcome;
}

struct PauliEvent {
  std::size_t gate;
  int code;  // base-4 digits, one per touched qubit, first target most significant
};

}  // namespace

Counts::Counts(int num_qubits, std::vector<std::uint64_t> table)
    : num_qubits_(num_qubits), shots_(0), table_(std::move(table)) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) throw InvalidArgument("qubit count must lie in [1, 12]");
  if (table_.size() != (std::size_t{1} << num_qubits)) throw InvalidArgument("count table has the wrong size");
  for (auto c : table_) shots_ += c;
  if (shots_ == 0) throw InvalidArgument("counts must record at least one shot");
}

Counts Counts::from_map(int num_qubits, const std::map<std::string, std::uint64_t>& table) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) throw InvalidArgument("qubit count must lie in [1, 12]");
  std::vector<std::uint64_t> dense(std::size_t{1} << num_qubits, 0);
  for (const auto& [bits, c] : table) {
    if (bits.size() != static_cast<std::size_t>(num_qubits)) {
      throw InvalidArgument("bitstring '" + bits + "' has the wrong length");
    }
    dense[basis_index(bits)] += c;
  }
  return Counts(num_qubits, std::move(dense));
}

std::uint64_t Counts::count(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(num_qubits_)) throw InvalidArgument("bitstring length mismatch");
  return table_[basis_index(bits)];
}

std::map<std::string, std::uint64_t> Counts::table() const {
  std::map<std::string, std::uint64_t> out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != 0) out.emplace(bitstring(i, num_qubits_), table_[i]);
  }
  return out;
}

std::vector<double> Counts::frequencies() const {
  std::vector<double> f(table_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<double>(table_[i]) / static_cast<double>(shots_);
  return f;
}

NoiseModel::NoiseModel(double p1q, double p2q, double readout, std::uint64_t seed)
    : p1q_(p1q), p2q_(p2q), readout_(readout), seed_(seed) {
  check_prob(p1q, "depolarizing_prob_1q");
  check_prob(p2q, "depolarizing_prob_2q");
  check_prob(readout, "readout_flip_prob");
}

NoiseModel NoiseModel::defaults(std::uint64_t seed) {
  return NoiseModel(kDefault1q, kDefault2q, kDefaultReadout, seed);
}

NoiseModel NoiseModel::noiseless(std::uint64_t seed) { return NoiseModel(0.0, 0.0, 0.0, seed); }

NoiseModel NoiseModel::with_seed(std::uint64_t seed) const { return NoiseModel(p1q_, p2q_, readout_, seed); }

StateVector apply_gate(const StateVector& state, const GateApplication& app) {
  validate_application(app, state.num_qubits());
  const GateMatrix g = app.resolve();
  StateBuilder b(state);
  apply_matrix(b.amplitudes(), state.num_qubits(), app.targets, g.entries());
  return std::move(b).build();
}

StateVector run_exact(const Circuit& circuit, const StateVector& initial) {
  if (circuit.num_qubits() != initial.num_qubits()) {
    throw InvalidArgument("circuit and initial state differ in qubit count");
  }
  StateBuilder b(initial);
  for (const auto& app : circuit.gates()) {
    apply_matrix(b.amplitudes(), circuit.num_qubits(), app.targets, app.resolve().entries());
  }
  return std::move(b).build();
}

Counts sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  return sample(state, shots, NoiseModel::noiseless(seed));
}

Counts sample(const StateVector& state, std::uint64_t shots, const NoiseModel& noise) {
  if (shots == 0) throw InvalidArgument("shots must be positive");
  const int n = state.num_qubits();
  const auto cdf = cumulative(state.probabilities());
  Rng rng = make_rng(noise.seed(), 0);
  std::vector<std::uint64_t> table(state.dimension(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const std::size_t out = draw_outcome(cdf, rng);
    ++table[flip_readout(out, n, noise.readout_flip_prob(), rng)];
  }
  return Counts(n, std::move(table));
}

Counts run_noisy(const Circuit& circuit, const StateVector& initial, const NoiseModel& noise,
                 std::uint64_t shots, unsigned threads) {
  if (shots == 0) throw InvalidArgument("shots must be positive");
  const StateVector ideal = run_exact(circuit, initial);
  const int n = circuit.num_qubits();
  const auto ideal_cdf = cumulative(ideal.probabilities());

  std::vector<Eigen::MatrixXcd> mats;
  std::vector<int> arity;
  mats.reserve(circuit.size());
  for (const auto& app : circuit.gates()) {
    mats.push_back(app.resolve().entries());
    arity.push_back(static_cast<int>(app.targets.size()));
  }

  auto trajectory = [&](std::uint64_t index) {
    Rng rng = make_rng(noise.seed(), index);
    std::vector<PauliEvent> events;
    for (std::size_t g = 0; g < mats.size(); ++g) {
      const int a = arity[g];
      const double p = a == 1 ? noise.depolarizing_prob_1q() : noise.depolarizing_prob_2q();
      if (p > 0.0 && uniform01(rng) < p) {
        const int choices = (1 << (2 * a)) - 1;
        const int code = 1 + std::min(choices - 1, static_cast<int>(uniform01(rng) * choices));
        events.push_back({g, code});
      }
    }
    std::size_t outcome;
    if (events.empty()) {
      outcome = draw_outcome(ideal_cdf, rng);
    } else {
      std::vector<complex> amps(initial.amplitudes().begin(), initial.amplitudes().end());
      std::size_t next = 0;
      for (std::size_t g = 0; g < mats.size(); ++g) {
        const auto& targets = circuit.gates()[g].targets;
        apply_matrix(amps, n, targets, mats[g]);
        if (next < events.size() && events[next].gate == g) {
          const int a = arity[g];
          for (int j = 0; j < a; ++j) {
            const int pauli = (events[next].code >> (2 * (a - 1 - j))) & 3;
            if (pauli != 0) apply_pauli(amps, n, targets[static_cast<std::size_t>(j)], pauli);
          }
          ++next;
        }
      }
      std::vector<double> p(amps.size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amps[i]);
      outcome = draw_outcome(cumulative(p), rng);
    }
    return flip_readout(outcome, n, noise.readout_flip_prob(), rng);
  };

  unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shots));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(ideal.dimension(), 0));
  auto work = [&](unsigned w) {
    const std::uint64_t lo = shots * w / workers;
    const std::uint64_t hi = shots * (w + 1) / workers;
    for (std::uint64_t s = lo; s < hi; ++s) ++partial[w][trajectory(s)];
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> table(ideal.dimension(), 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < table.size(); ++i) table[i] += part[i];
  }
  return Counts(n, std::move(table));
}

}  // namespace qsvm
