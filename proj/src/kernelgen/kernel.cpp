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

#include "qsvm/kernelgen/kernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <sstream>

#include "qsvm/error.hpp"

namespace qsvm {

KernelMatrix::KernelMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) throw InvalidArgument("kernel must be square");
  if (!entries_.allFinite()) throw NumericError("kernel has non-finite entries");
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw NumericError("kernel is not symmetric");
  }
  if (FMatrix::eigenvalues(entries_).minCoeff() < -1e-8) throw NumericError("kernel is not positive semidefinite");
}

FMatrix::FMatrix(Eigen::MatrixXd entries, double gamma) : entries_(std::move(entries)), gamma_(gamma) {
  if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  if (entries_.rows() != entries_.cols()) throw InvalidArgument("F must be square");
}

Eigen::MatrixXd FMatrix::rounded() const {
  return entries_.unaryExpr([](double v) { return std::round(v * 2.0) / 2.0; });
}

Eigen::VectorXd FMatrix::eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

DensityMatrix2 khat_from_probabilities(std::span<const double> probs) {
  if (probs.size() != 4) throw InvalidArgument("expected probabilities over 00, 01, 10, 11");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw InvalidArgument("probabilities must be nonnegative");
    total += p;
  }
  if (!(total > 0.0)) throw NumericError("probability vector is empty");
  // amp[q0][q1]
  double amp[2][2];
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) amp[a][b] = std::sqrt(probs[static_cast<std::size_t>(2 * a + b)] / total);
  }
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int j = 0; j < 2; ++j) {
    // p_j |psi_j><psi_j| with psi_j unnormalized = (amp[0][j], amp[1][j]).
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) rho(r, c) += amp[r][j] * amp[c][j];
    }
  }
  return DensityMatrix2(rho);
}

DensityMatrix2 khat_from_counts(const Counts& counts) {
  if (counts.num_qubits() != 2) throw InvalidArgument("kernel readout expects a two-qubit record");
  const auto f = counts.frequencies();
  return khat_from_probabilities(f);
}

KernelMatrix khat_from_product_states(std::span<const std::array<double, 2>> vectors) {
  const auto m = static_cast<Eigen::Index>(vectors.size());
  if (m < 1) throw InvalidArgument("need at least one training vector");
  Eigen::MatrixXd phi(m, 2);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& v = vectors[static_cast<std::size_t>(i)];
    const double n = std::hypot(v[0], v[1]);
    if (std::abs(n - 1.0) > 5e-3) {
      std::ostringstream msg;
      msg << "training vector " << i << " has norm " << n << ", expected 1";
      throw InvalidArgument(msg.str());
    }
    phi(i, 0) = v[0];
    phi(i, 1) = v[1];
  }
  phi /= std::sqrt(static_cast<double>(m));
  // Rows index |i-1>, columns the data qubit; tracing the data qubit out.
  return KernelMatrix(phi * phi.transpose());
}

std::vector<std::array<double, 2>> product_vectors_from_counts(const Counts& counts) {
  const int n = counts.num_qubits();
  const auto f = counts.frequencies();
  std::vector<std::array<double, 2>> out(static_cast<std::size_t>(n), {0.0, 0.0});
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    for (int q = 0; q < n; ++q) {
      const int bit = static_cast<int>((idx >> (n - 1 - q)) & 1U);
      out[static_cast<std::size_t>(q)][static_cast<std::size_t>(bit)] += f[idx];
    }
  }
  for (auto& v : out) v = {std::sqrt(v[0]), std::sqrt(v[1])};
  return out;
}

KernelMatrix kernel_from_density(const DensityMatrix2& rho) {
  Eigen::MatrixXd k = rho.entries().real();
  k = 0.5 * (k + k.transpose()).eval();
  return KernelMatrix(k);
}

FMatrix build_f(const KernelMatrix& khat, double gamma, double trace_k) {
  if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  const double scale = trace_k > 0.0 ? trace_k : static_cast<double>(khat.size());
  const Eigen::MatrixXd k = scale * khat.entries();
  const double reg = std::isinf(gamma) ? 0.0 : 1.0 / gamma;
  return FMatrix(k + reg * Eigen::MatrixXd::Identity(k.rows(), k.cols()), gamma);
}

FMatrix build_f(const DensityMatrix2& khat, double gamma, double trace_k) {
  return build_f(kernel_from_density(khat), gamma, trace_k);
}

Eigen::VectorXd solve_ls_svm_classical(const Eigen::MatrixXd& f, const Eigen::VectorXd& y) {
  if (f.rows() != f.cols() || f.rows() != y.size()) throw InvalidArgument("F and y sizes disagree");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(f);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  const double cond = smin > 0.0 ? s(0) / smin : std::numeric_limits<double>::infinity();
  if (!(cond <= 1e12)) {
    std::ostringstream msg;
    msg << "F is singular to working precision (condition number " << cond << ")";
    throw NumericError(msg.str());
  }
  return f.partialPivLu().solve(y);
}

Eigen::VectorXd solve_ls_svm_classical(const FMatrix& f, const Eigen::VectorXd& y) {
  return solve_ls_svm_classical(f.entries(), y);
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json kernel_report(const KernelMatrix& khat, const FMatrix& f) {
  const Eigen::VectorXd ev = FMatrix::eigenvalues(f.rounded());
  return {{"khat", matrix_to_json(khat.entries())},
          {"gamma", f.gamma()},
          {"F", matrix_to_json(f.entries())},
          {"F_rounded", matrix_to_json(f.rounded())},
          {"F_rounded_eigenvalues", std::vector<double>(ev.data(), ev.data() + ev.size())}};
}

}  // namespace qsvm
