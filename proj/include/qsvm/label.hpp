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

#ifndef QSVM_LABEL_HPP
#define QSVM_LABEL_HPP

#include "qsvm/error.hpp"

namespace qsvm {

/// Binary class label.
enum class Label : int { kMinus = -1, kPlus = 1 };

inline int to_int(Label l) noexcept { return static_cast<int>(l); }

inline Label label_from_int(int v) {
  if (v == 1) return Label::kPlus;
  if (v == -1) return Label::kMinus;
  throw InvalidArgument("label must be +1 or -1");
}

/// sgn with sgn(0) = +1.
inline Label sign_label(double v) noexcept { return v >= 0.0 ? Label::kPlus : Label::kMinus; }

inline Label negate(Label l) noexcept { return l == Label::kPlus ? Label::kMinus : Label::kPlus; }

}  // namespace qsvm

#endif  // QSVM_LABEL_HPP
