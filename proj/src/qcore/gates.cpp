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

#include "qsvm/qcore/gates.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <sstream>

#include "qsvm/error.hpp"

namespace qsvm {
namespace {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

struct TagInfo {
  GateTag tag;
  std::string_view name;
  int arity;
  int params;
};

constexpr std::array<TagInfo, 16> kTags{{
    {GateTag::kH, "h", 1, 0},
    {GateTag::kX, "x", 1, 0},
    {GateTag::kY, "y", 1, 0},
    {GateTag::kZ, "z", 1, 0},
    {GateTag::kS, "s", 1, 0},
    {GateTag::kSdg, "sdg", 1, 0},
    {GateTag::kRy, "ry", 1, 1},
    {GateTag::kHTheta, "h_theta", 1, 1},
    {GateTag::kCnot, "cx", 2, 0},
    {GateTag::kZeroCnot, "zero_cx", 2, 0},
    {GateTag::kCHTheta, "ch_theta", 2, 1},
    {GateTag::kCRy, "cry", 2, 1},
    {GateTag::kCCRy, "ccry", 3, 1},
    {GateTag::kCPhase, "cphase", 2, 1},
    {GateTag::kCEvolve, "cevolve", 2, 3},
    {GateTag::kUnitary, "unitary", 0, 0},
}};

const TagInfo& info(GateTag tag) {
  for (const auto& t : kTags) {
    if (t.tag == tag) return t;
  }
  throw InvalidArgument("unknown gate tag");
}

Mat ry(double theta) {
  Mat m(2, 2);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  m << c, -s, s, c;
  return m;
}

Mat h_theta(double theta) {
  Mat m(2, 2);
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  m << c, s, s, -c;
  return m;
}

// Identity on the control-off subspace, `block` on the all-ones subspace.
Mat controlled(const Mat& block, int num_controls) {
  const Eigen::Index dim = block.rows() << num_controls;
  Mat m = Mat::Identity(dim, dim);
  const Eigen::Index k = block.rows();
  m.bottomRightCorner(k, k) = block;
  return m;
}

}  // namespace

int gate_arity(GateTag tag) { return info(tag).arity; }

int gate_param_count(GateTag tag) { return info(tag).params; }

bool is_two_qubit(GateTag tag) { return info(tag).arity == 2; }

std::string_view gate_name(GateTag tag) { return info(tag).name; }

GateTag gate_from_name(std::string_view name) {
  for (const auto& t : kTags) {
    if (t.name == name) return t.tag;
  }
  throw InvalidArgument("unknown gate name '" + std::string(name) + "'");
}

GateMatrix::GateMatrix(Eigen::MatrixXcd entries) : arity_(0), entries_(std::move(entries)) {
  const auto n = entries_.rows();
  if (n != entries_.cols() || n < 2 || (n & (n - 1)) != 0) {
    throw InvalidArgument("gate matrix must be square with power-of-two size");
  }
  while ((Eigen::Index{1} << arity_) < n) ++arity_;
  if (!entries_.allFinite()) throw InvalidArgument("gate matrix has non-finite entries");
  const double err = unitarity_error();
  if (err > 1e-10) {
    std::ostringstream msg;
    msg << "gate matrix is not unitary (max |U^dagger U - I| = " << err << ")";
    throw InvalidArgument(msg.str());
  }
}

double GateMatrix::unitarity_error() const {
  const Mat d = entries_.adjoint() * entries_ - Mat::Identity(entries_.rows(), entries_.cols());
  return d.cwiseAbs().maxCoeff();
}

GateMatrix gate_matrix(GateTag tag, std::span<const double> params) {
  const TagInfo& ti = info(tag);
  if (tag == GateTag::kUnitary) throw InvalidArgument("kUnitary has no named matrix");
  if (static_cast<int>(params.size()) != ti.params) {
    std::ostringstream msg;
    msg << "gate '" << ti.name << "' expects " << ti.params << " parameter(s), got " << params.size();
    throw InvalidArgument(msg.str());
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw InvalidArgument("gate parameter is not finite");
  }
  const double r = 1.0 / std::sqrt(2.0);
  const cd i{0.0, 1.0};
  Mat m(2, 2);
  switch (tag) {
    case GateTag::kH:
      m << r, r, r, -r;
      return GateMatrix(m);
    case GateTag::kX:
      m << 0, 1, 1, 0;
      return GateMatrix(m);
    case GateTag::kY:
      m << 0, -i, i, 0;
      return GateMatrix(m);
    case GateTag::kZ:
      m << 1, 0, 0, -1;
      return GateMatrix(m);
    case GateTag::kS:
      m << 1, 0, 0, i;
      return GateMatrix(m);
    case GateTag::kSdg:
      m << 1, 0, 0, -i;
      return GateMatrix(m);
    case GateTag::kRy:
      return GateMatrix(ry(params[0]));
    case GateTag::kHTheta:
      return GateMatrix(h_theta(params[0]));
    case GateTag::kCnot:
      m << 0, 1, 1, 0;
      return GateMatrix(controlled(m, 1));
    case GateTag::kZeroCnot: {
      Mat z = Mat::Identity(4, 4);
      z.topLeftCorner(2, 2) << 0, 1, 1, 0;
      return GateMatrix(z);
    }
    case GateTag::kCHTheta:
      return GateMatrix(controlled(h_theta(params[0]), 1));
    case GateTag::kCRy:
      return GateMatrix(controlled(ry(params[0]), 1));
    case GateTag::kCCRy:
      return GateMatrix(controlled(ry(params[0]), 2));
    case GateTag::kCPhase:
      m << 1, 0, 0, std::exp(i * params[0]);
      return GateMatrix(controlled(m, 1));
    case GateTag::kCEvolve: {
      const double t = params[0];
      const double d = params[1];
      const double o = params[2];
      const cd g = std::exp(i * (t * d));
      m << g * std::cos(t * o), g * i * std::sin(t * o), g * i * std::sin(t * o), g * std::cos(t * o);
      return GateMatrix(controlled(m, 1));
    }
    case GateTag::kUnitary:
      break;
  }
  throw InvalidArgument("unhandled gate tag");
}

double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sizes differ");
  const cd s = (a.adjoint() * b).trace();
  const cd phase = std::abs(s) > 1e-15 ? s / std::abs(s) : cd{1.0, 0.0};
  return (a * phase - b).cwiseAbs().maxCoeff();
}

}  // namespace qsvm
