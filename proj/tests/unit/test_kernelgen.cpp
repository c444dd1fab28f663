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
#include <limits>

#include "qsvm/circuits/builders.hpp"
#include "qsvm/error.hpp"
#include "qsvm/kernelgen/kernel.hpp"
#include "qsvm/qcore/simulator.hpp"

namespace qsvm {
namespace {

Eigen::MatrixXd m2(double a, double b, double c, double d) { return (Eigen::MatrixXd(2, 2) << a, b, c, d).finished(); }

std::array<double, 2> reference_angles() { return {std::atan2(0.159, 0.987), std::atan2(0.935, 0.345)}; }

TEST(Khat, AllZeroCountsGiveProjector) {
  const DensityMatrix2 k = khat_from_counts(Counts::from_map(2, {{"00", 8192}}));
  EXPECT_NEAR(k(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(k(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(k(1, 1).real(), 0.0, 1e-15);
}

TEST(Khat, SampledOriginalOracleApproximatesReferenceMatrix) {
  const StateVector s = run_exact(circuits::build_oracle_original(reference_angles()), StateVector(2));
  const DensityMatrix2 k = khat_from_counts(sample(s, 8192, 1));
  EXPECT_NEAR(k(0, 0).real(), 0.5, 0.02);
  EXPECT_NEAR(k(0, 1).real(), 0.25, 0.02);
  EXPECT_NEAR(k(1, 1).real(), 0.5, 0.02);
}

TEST(Khat, NoiseInflatesTheMagnitudeOnlyOverlap) {
  // Square roots of noisy probabilities lift the small amplitudes, so the
  // estimated overlap grows rather than shrinks.
  const Circuit c = circuits::build_oracle_original(reference_angles());
  const Counts counts = run_noisy(c, StateVector(2), NoiseModel::defaults(3), 8192);
  const DensityMatrix2 k = khat_from_counts(counts);
  EXPECT_GT(k(0, 1).real(), 0.25);
  EXPECT_LT(k(0, 1).real(), 0.5);
}

TEST(Khat, ProductStatesOfIdenticalData) {
  const std::vector<std::array<double, 2>> v{{1.0, 0.0}, {1.0, 0.0}};
  const KernelMatrix k = khat_from_product_states(v);
  EXPECT_LT((k.entries() - m2(0.5, 0.5, 0.5, 0.5)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Khat, ProductStatesOfCanonicalTargets) {
  const std::vector<std::array<double, 2>> v{{0.987, 0.159}, {0.345, 0.935}};
  const KernelMatrix k = khat_from_product_states(v);
  EXPECT_NEAR(k(0, 1), (0.987 * 0.345 + 0.159 * 0.935) / 2.0, 1e-15);
  EXPECT_NEAR(k(0, 1), 0.2447, 2e-4);
}

TEST(Khat, ProductStatesOfOrthogonalData) {
  const std::vector<std::array<double, 2>> v{{0.6, 0.8}, {-0.8, 0.6}};
  const KernelMatrix k = khat_from_product_states(v);
  EXPECT_LT((k.entries() - m2(0.5, 0.0, 0.0, 0.5)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Khat, ProductStatesRejectNonUnitVectors) {
  const std::vector<std::array<double, 2>> v{{0.7, 0.0}, {1.0, 0.0}};
  EXPECT_THROW(khat_from_product_states(v), InvalidArgument);
}

TEST(Khat, ProductVectorsFromCountsReadMarginals) {
  const Counts c = Counts::from_map(2, {{"00", 25}, {"01", 25}, {"10", 25}, {"11", 25}});
  const auto v = product_vectors_from_counts(c);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_NEAR(v[0][0], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(v[1][1], std::sqrt(0.5), 1e-15);
}

TEST(KernelMatrix, ValidatesSymmetryAndDefiniteness) {
  EXPECT_THROW(KernelMatrix(m2(1.0, 0.2, 0.3, 1.0)), NumericError);
  EXPECT_THROW(KernelMatrix(m2(1.0, 2.0, 2.0, 1.0)), NumericError);
}

TEST(BuildF, DefaultGammaGivesExactAndRoundedF) {
  const FMatrix f = build_f(KernelMatrix(m2(0.5, 0.25, 0.25, 0.5)), 8.0);
  EXPECT_LT((f.entries() - m2(1.125, 0.5, 0.5, 1.125)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((f.rounded() - m2(1.0, 0.5, 0.5, 1.0)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BuildF, InfiniteGammaDropsTheRegularizer) {
  const FMatrix f = build_f(KernelMatrix(m2(0.5, 0.25, 0.25, 0.5)), std::numeric_limits<double>::infinity());
  EXPECT_LT((f.entries() - m2(1.0, 0.5, 0.5, 1.0)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(build_f(KernelMatrix(m2(0.5, 0.25, 0.25, 0.5)), 0.0), InvalidArgument);
}

TEST(BuildF, RoundedEigenvalues) {
  const Eigen::VectorXd ev = FMatrix::eigenvalues(m2(1.0, 0.5, 0.5, 1.0));
  EXPECT_NEAR(ev.minCoeff(), 0.5, 1e-12);
  EXPECT_NEAR(ev.maxCoeff(), 1.5, 1e-12);
}

TEST(Solve, RoundedReferenceSystem) {
  const Eigen::VectorXd a = solve_ls_svm_classical(m2(1.0, 0.5, 0.5, 1.0), Eigen::Vector2d(1.0, -1.0));
  EXPECT_NEAR(a(0), 2.0, 1e-12);
  EXPECT_NEAR(a(1), -2.0, 1e-12);
}

TEST(Solve, IdentitySystem) {
  const Eigen::VectorXd a = solve_ls_svm_classical(m2(1.0, 0.0, 0.0, 1.0), Eigen::Vector2d(1.0, -1.0));
  EXPECT_NEAR(a(0), 1.0, 1e-15);
  EXPECT_NEAR(a(1), -1.0, 1e-15);
}

TEST(Solve, UnroundedReferenceSystem) {
  const Eigen::VectorXd a = solve_ls_svm_classical(m2(1.125, 0.5, 0.5, 1.125), Eigen::Vector2d(1.0, -1.0));
  EXPECT_NEAR(a(0), 1.6, 1e-12);
  EXPECT_NEAR(a(1), -1.6, 1e-12);
}

TEST(Solve, SingularSystemIsRejected) {
  EXPECT_THROW(solve_ls_svm_classical(m2(1.0, 1.0, 1.0, 1.0), Eigen::Vector2d(1.0, -1.0)), NumericError);
}

TEST(Report, ContainsEveryMatrix) {
  const KernelMatrix k(m2(0.5, 0.25, 0.25, 0.5));
  const auto j = kernel_report(k, build_f(k));
  for (const char* key : {"khat", "gamma", "F", "F_rounded", "F_rounded_eigenvalues"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_DOUBLE_EQ(j["F"][0][0].get<double>(), 1.125);
}

}  // namespace
}  // namespace qsvm
