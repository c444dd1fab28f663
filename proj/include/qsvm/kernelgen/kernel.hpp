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

#ifndef QSVM_KERNELGEN_KERNEL_HPP
#define QSVM_KERNELGEN_KERNEL_HPP

#include <Eigen/Dense>
#include <array>
#include <span>
#include <vector>

#include "json.hpp"
#include "qsvm/qcore/density.hpp"
#include "qsvm/qcore/simulator.hpp"

namespace qsvm {

inline constexpr double kDefaultGamma = 8.0;

/// Symmetric positive semidefinite Gram matrix (or its trace-normalized
/// form). PSD is checked to 1e-8.
class KernelMatrix {
 public:
  explicit KernelMatrix(Eigen::MatrixXd entries);

  [[nodiscard]] const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  [[nodiscard]] Eigen::Index size() const noexcept { return entries_.rows(); }
  [[nodiscard]] double trace() const { return entries_.trace(); }
  [[nodiscard]] double operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

 private:
  Eigen::MatrixXd entries_;
};

/// F = K + I / gamma.
class FMatrix {
 public:
  FMatrix(Eigen::MatrixXd entries, double gamma);

  [[nodiscard]] const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }

  /// Entries snapped to the nearest multiple of 0.5: the form whose
  /// eigenvalues the optimized HHL circuit is built for.
  [[nodiscard]] Eigen::MatrixXd rounded() const;

  /// Ascending eigenvalues of a symmetric matrix.
  static Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m);

 private:
  Eigen::MatrixXd entries_;
  double gamma_;
};

/// Reduced state of qubit 0 from a two-qubit measurement record.
///
/// Amplitudes are taken as sqrt(frequency) on the nonnegative real branch
/// and grouped by the value of qubit 1, so rho = sum_j p_j |psi_j><psi_j|.
/// Phases are not observable from counts; the result is exact only for
/// states with nonnegative real amplitudes.
DensityMatrix2 khat_from_counts(const Counts& counts);

/// The same grouping applied to a known probability vector over 00..11.
DensityMatrix2 khat_from_probabilities(std::span<const double> probs);

/// K-hat from M two-component vectors: stacks them into a 2M vector scaled
/// by 1/sqrt(M) and traces out the data qubit, so entry (j, k) is
/// x_j . x_k / M. Each input must have unit norm within 5e-3.
KernelMatrix khat_from_product_states(std::span<const std::array<double, 2>> vectors);

/// Per-qubit vectors (sqrt P(q = 0), sqrt P(q = 1)) from the marginals of
/// a product-state measurement record.
std::vector<std::array<double, 2>> product_vectors_from_counts(const Counts& counts);

/// K-hat as a 2x2 kernel matrix (real part of rho).
KernelMatrix kernel_from_density(const DensityMatrix2& rho);

/// K = trace_k * K-hat, F = K + I / gamma. trace_k defaults to the matrix
/// size (unit training vectors). Throws InvalidArgument for gamma <= 0;
/// gamma = +inf gives F = K.
FMatrix build_f(const KernelMatrix& khat, double gamma = kDefaultGamma, double trace_k = 0.0);
FMatrix build_f(const DensityMatrix2& khat, double gamma = kDefaultGamma, double trace_k = 2.0);

/// alpha = F^-1 y by direct solve. Throws NumericError when the condition
/// number exceeds 1e12.
Eigen::VectorXd solve_ls_svm_classical(const Eigen::MatrixXd& f, const Eigen::VectorXd& y);
Eigen::VectorXd solve_ls_svm_classical(const FMatrix& f, const Eigen::VectorXd& y);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);
nlohmann::json kernel_report(const KernelMatrix& khat, const FMatrix& f);

}  // namespace qsvm

#endif  // QSVM_KERNELGEN_KERNEL_HPP
