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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "qsvm/circuits/builders.hpp"
#include "qsvm/circuits/decompose.hpp"
#include "qsvm/circuits/depth.hpp"
#include "qsvm/classify/classify.hpp"
#include "qsvm/error.hpp"
#include "qsvm/kernelgen/kernel.hpp"
#include "qsvm/metrics/metrics.hpp"
#include "qsvm/preprocess/preprocess.hpp"
#include "qsvm/qcore/density.hpp"
#include "qsvm/qcore/simulator.hpp"

namespace qsvm {
namespace {

using testing::Gen;
constexpr double kPi = std::numbers::pi;

GateApplication random_gate(Gen& g, int n) {
  static const GateTag one[] = {GateTag::kH, GateTag::kX, GateTag::kY, GateTag::kZ,
                                GateTag::kS, GateTag::kSdg, GateTag::kRy, GateTag::kHTheta};
  static const GateTag two[] = {GateTag::kCnot, GateTag::kZeroCnot, GateTag::kCHTheta,
                                GateTag::kCRy, GateTag::kCPhase, GateTag::kCEvolve};
  const int a = g.integer(0, n - 1);
  if (n == 1 || g.uniform() < 0.5) {
    const GateTag t = one[g.integer(0, 7)];
    return make_gate(t, {a}, std::vector<double>(static_cast<std::size_t>(gate_param_count(t)), g.angle()));
  }
  int b = g.integer(0, n - 2);
  if (b >= a) ++b;
  const GateTag t = two[g.integer(0, 5)];
  std::vector<double> params;
  for (int i = 0; i < gate_param_count(t); ++i) params.push_back(g.angle());
  return make_gate(t, {a, b}, params);
}

Circuit random_circuit(Gen& g, int n, int gates) {
  Circuit c(n);
  for (int i = 0; i < gates; ++i) c.append(random_gate(g, n));
  return c;
}

// Reduced density matrix by explicit sums over the 2^(n-1) environment
// indices, written without the bit-pairing used by the library.
Eigen::Matrix2cd brute_partial_trace(const StateVector& s, int keep) {
  const int n = s.num_qubits();
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (std::size_t env = 0; env < (std::size_t{1} << (n - 1)); ++env) {
        std::string bits_r, bits_c;
        const std::string e = bitstring(env, n - 1);
        std::size_t k = 0;
        for (int q = 0; q < n; ++q) {
          if (q == keep) {
            bits_r += static_cast<char>('0' + r);
            bits_c += static_cast<char>('0' + c);
          } else {
            bits_r += e[k];
            bits_c += e[k];
            ++k;
          }
        }
        rho(r, c) += s.amplitude(bits_r) * std::conj(s.amplitude(bits_c));
      }
    }
  }
  return rho;
}

TEST(Property, UnitaryEvolutionPreservesNorm) {
  Gen g(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = g.integer(1, 6);
    const StateVector out = run_exact(random_circuit(g, n, g.integer(0, 30)), g.state(n));
    ASSERT_NEAR(out.norm(), 1.0, 1e-12) << "trial " << trial;
  }
}

TEST(Property, SampledCountsStayWithinFiveSigma) {
  Gen g(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = g.integer(1, 4);
    const StateVector s = g.state(n);
    const std::uint64_t shots = 4000;
    const Counts c = sample(s, shots, static_cast<std::uint64_t>(trial));
    ASSERT_EQ(c.shots(), shots);
    const auto p = s.probabilities();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double sigma = std::sqrt(shots * p[i] * (1 - p[i]));
      ASSERT_LE(std::abs(static_cast<double>(c.count(i)) - shots * p[i]), 5 * sigma + 1.0) << trial << ' ' << i;
    }
  }
}

TEST(Property, PartialTraceMatchesBruteForce) {
  Gen g(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = g.integer(1, 4);
    const StateVector s = g.state(n);
    const int keep = g.integer(0, n - 1);
    const Eigen::Matrix2cd fast = reduced_density_matrix(s, keep).entries();
    ASSERT_LT((fast - brute_partial_trace(s, keep)).cwiseAbs().maxCoeff(), 1e-12) << trial;
  }
}

TEST(Property, ProductStateMarginalIsTheFactor) {
  Gen g(4);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector a = g.state(1);
    const StateVector b = g.state(1);
    const DensityMatrix2 rho = reduced_density_matrix(a.tensor(b), 0);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        ASSERT_LT(std::abs(rho(r, c) - a.amplitude(static_cast<std::size_t>(r)) *
                                           std::conj(a.amplitude(static_cast<std::size_t>(c)))),
                  1e-12);
      }
    }
  }
}

TEST(Property, ZeroNoiseTrajectoriesMatchIdeal) {
  Gen g(5);
  for (int trial = 0; trial < 5; ++trial) {
    const Circuit c = random_circuit(g, 3, 12);
    const Counts counts = run_noisy(c, StateVector(3), NoiseModel::noiseless(static_cast<std::uint64_t>(trial)), 100000);
    ASSERT_LT(js_divergence(dist_from_state(run_exact(c, StateVector(3))), dist_from_counts(counts)), 0.01);
  }
}

TEST(Property, DecompositionsMatchTargetsOverRandomAngles) {
  Gen g(6);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = g.uniform(-2 * kPi, 2 * kPi);
    const std::vector<double> p{t};
    for (int active = 0; active < 2; ++active) {
      Eigen::MatrixXcd ref = circuits::unitary_of({make_gate(GateTag::kCRy, {0, 1}, p)}, 2);
      if (active == 0) {
        const Eigen::MatrixXcd x = circuits::unitary_of({make_gate(GateTag::kX, {0})}, 2);
        ref = x * ref * x;
      }
      ASSERT_LT((circuits::unitary_of(circuits::decompose_controlled_ry(t, 0, 1, active), 2) - ref)
                    .cwiseAbs()
                    .maxCoeff(),
                1e-9);
    }
    const Eigen::MatrixXcd ccry = circuits::unitary_of({make_gate(GateTag::kCCRy, {0, 1, 2}, p)}, 3);
    ASSERT_LT((circuits::unitary_of(circuits::decompose_cc_ry(t, {0, 1}, 2), 3) - ccry).cwiseAbs().maxCoeff(), 1e-9);
    const Eigen::MatrixXcd ch = circuits::unitary_of({make_gate(GateTag::kCHTheta, {0, 1}, p)}, 2);
    ASSERT_LT(distance_up_to_phase(circuits::unitary_of(circuits::decompose_controlled_h_theta(t, 0, 1), 2), ch),
              1e-9);
  }
}

TEST(Property, OriginalOracleDepthFollowsFormula) {
  Gen g(7);
  for (int m : {2, 4}) {
    std::vector<double> a;
    for (int i = 0; i < m; ++i) a.push_back(g.angle());
    ASSERT_EQ(circuits::depth(circuits::build_oracle_original_generalized(a)), circuits::oracle_depth_formula(m));
  }
}

TEST(Property, HhlEncodesTheInverseOnEveryInput) {
  Gen g(8);
  const Eigen::Matrix2d f = (Eigen::Matrix2d() << 1.0, 0.5, 0.5, 1.0).finished();
  for (int trial = 0; trial < 100; ++trial) {
    const std::array<double, 2> y{g.normal(), g.normal()};
    const StateVector s = run_exact(circuits::build_hhl_optimized(), circuits::hhl_input_state(y));
    const Eigen::Vector2d x = f.inverse() * Eigen::Vector2d(y[0], y[1]);
    const Eigen::Vector2d got(s.amplitude(0b0001).real(), s.amplitude(0b0011).real());
    // Parallel, and with the same orientation.
    ASSERT_NEAR(x.normalized().dot(got.normalized()), 1.0, 1e-9) << trial;
  }
}

TEST(Property, BaselineAndHhlSolveTheSameSystem) {
  Gen g(9);
  for (int trial = 0; trial < 50; ++trial) {
    circuits::BaselineParams p = circuits::BaselineParams::defaults();
    p.input_angle = g.angle();
    const StateVector b = run_exact(circuits::build_baseline_qsvm(p), StateVector(4));
    const StateVector h = run_exact(circuits::build_hhl_optimized(),
                                    circuits::hhl_input_state({std::cos(p.input_angle), std::sin(p.input_angle)}));
    const Eigen::Vector2d vb(b.amplitude(0b0001).real(), b.amplitude(0b0011).real());
    const Eigen::Vector2d vh(h.amplitude(0b0001).real(), h.amplitude(0b0011).real());
    ASSERT_NEAR(std::abs(vb.normalized().dot(vh.normalized())), 1.0, 1e-9) << trial;
  }
}

TEST(Property, ReadoutFromExactFrequenciesMatchesState) {
  Gen g(10);
  for (int trial = 0; trial < 500; ++trial) {
    const StateVector s = g.state(4);
    std::vector<std::uint64_t> table;
    for (double p : s.probabilities()) table.push_back(static_cast<std::uint64_t>(std::llround(p * 1e12)));
    const Counts c(4, table);
    const AlphaReadout a = readout_hhl(s);
    const AlphaReadout b = readout_hhl(c);
    ASSERT_NEAR(a.alpha1, b.alpha1, 1e-5);
    ASSERT_NEAR(a.alpha2, b.alpha2, 1e-5);
    ASSERT_GE(a.alpha1, 0.0);
    ASSERT_LE(a.alpha2, 0.0);
  }
}

TEST(Property, KernelIsScaledGramMatrix) {
  Gen g(11);
  for (int m : {2, 4, 8}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> a;
      for (int i = 0; i < m; ++i) a.push_back(g.angle());
      Eigen::MatrixXd gram(m, m);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) gram(i, j) = std::cos(a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(j)]) / m;
      }
      std::vector<std::array<double, 2>> v;
      for (double t : a) v.push_back({std::cos(t), std::sin(t)});
      ASSERT_LT((khat_from_product_states(v).entries() - gram).cwiseAbs().maxCoeff(), 1e-12);
      if (m > 4) continue;
      // Original oracle: trace the data qubit out of the index register.
      const StateVector s = run_exact(circuits::build_oracle_original_generalized(a),
                                      StateVector(m == 2 ? 2 : 3));
      Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          for (int b = 0; b < 2; ++b) {
            rho(i, j) += (s.amplitude(static_cast<std::size_t>(2 * i + b)) *
                          std::conj(s.amplitude(static_cast<std::size_t>(2 * j + b))))
                             .real();
          }
        }
      }
      ASSERT_LT((rho - gram).cwiseAbs().maxCoeff(), 1e-12) << m;
    }
  }
}

TEST(Property, RegularizerShrinksWithGamma) {
  Gen g(12);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = g.angle();
    const std::vector<std::array<double, 2>> v{{1.0, 0.0}, {std::cos(t), std::sin(t)}};
    const KernelMatrix k = khat_from_product_states(v);
    double prev_diag = std::numeric_limits<double>::infinity();
    double prev_min = std::numeric_limits<double>::infinity();
    for (double gamma : {0.5, 1.0, 2.0, 8.0, 64.0, 1e6}) {
      const FMatrix f = build_f(k, gamma);
      ASSERT_NEAR(f.entries()(0, 1), 2.0 * k(0, 1), 1e-15);
      ASSERT_LT(f.entries()(0, 0), prev_diag);
      const double mn = FMatrix::eigenvalues(f.entries()).minCoeff();
      ASSERT_LT(mn, prev_min);
      prev_diag = f.entries()(0, 0);
      prev_min = mn;
    }
  }
}

TEST(Property, DecisionIsScaleInvariantAndAntisymmetric) {
  Gen g(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::array<double, 2> th{g.angle(), g.angle()};
    const double a1 = g.normal();
    const double a2 = g.normal();
    const SvmModel m(a1, a2, th, 8.0);
    const SvmModel neg(-a1, -a2, th, 8.0);
    const SvmModel big = m.scaled(g.uniform(0.01, 100.0));
    const double t = g.angle();
    ASSERT_EQ(classify_point(m, t), classify_point(big, t));
    ASSERT_NEAR(decision_value(neg, t), -decision_value(m, t), 1e-12);
    if (std::abs(decision_value(m, t)) > 1e-12) ASSERT_EQ(classify_point(neg, t), negate(classify_point(m, t)));
  }
}

TEST(Property, JsIsSymmetricAndBounded) {
  Gen g(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 16));
    std::vector<std::string> sup;
    for (std::size_t i = 0; i < n; ++i) sup.push_back(std::to_string(i));
    const ProbDist p(sup, g.distribution(n));
    const ProbDist q(sup, g.distribution(n));
    const double pq = js_divergence(p, q);
    ASSERT_NEAR(pq, js_divergence(q, p), 1e-9);
    ASSERT_GE(pq, 0.0);
    ASSERT_LE(pq, 1.0);
    ASSERT_NEAR(js_divergence(p, p), 0.0, 1e-9);
  }
}

TEST(Property, AngleRoundTripOutsideTheThirdQuadrant) {
  Gen g(15);
  for (int trial = 0; trial < 1000; ++trial) {
    const UnitPoint p = g.unit_point();
    const UnitPoint back = unit_from_angle(angle_of(p));
    if (p.x1 < 0 && p.x2 < 0) {
      // Third-quadrant points land on the antipode mirrored in the diagonal.
      ASSERT_NEAR(back.x1, -p.x2, 1e-12);
      ASSERT_NEAR(back.x2, -p.x1, 1e-12);
    } else {
      ASSERT_NEAR(back.x1, p.x1, 1e-12);
      ASSERT_NEAR(back.x2, p.x2, 1e-12);
    }
  }
}

TEST(Property, SolvedCoefficientsSatisfyTheMappingEquations) {
  Gen g(16);
  const std::array<double, 4> targets{0.987, 0.159, 0.345, 0.935};
  for (int trial = 0; trial < 100; ++trial) {
    const RawPoint a{g.uniform(0.5, 4.0), g.uniform(0.5, 4.0)};
    RawPoint b{g.uniform(0.5, 4.0), g.uniform(0.5, 4.0)};
    if (std::abs(a.t1 - b.t1) < 1e-3) b.t1 += 0.5;
    const MappingCoefficients k = solve_mapping_coefficients(a, b, targets);
    ASSERT_LT(mapping_residual(a, b, targets, k), 1e-6) << trial;
  }
}

TEST(Property, NoisyRunsAreReproducible) {
  Gen g(17);
  for (int trial = 0; trial < 5; ++trial) {
    const Circuit c = random_circuit(g, 3, 10);
    const NoiseModel n(0.02, 0.05, 0.02, static_cast<std::uint64_t>(trial));
    ASSERT_EQ(run_noisy(c, StateVector(3), n, 2000, 1), run_noisy(c, StateVector(3), n, 2000, 3));
  }
}

}  // namespace
}  // namespace qsvm
