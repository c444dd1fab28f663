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

#ifndef QSVM_PREPROCESS_IMAGE_HPP
#define QSVM_PREPROCESS_IMAGE_HPP

#include <cstddef>
#include <vector>

namespace qsvm {

/// Row-major black/white bitmap; true marks a black pixel.
class BinaryImage {
 public:
  BinaryImage(int width, int height, std::vector<bool> pixels);
  BinaryImage(int width, int height);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] bool at(int x, int y) const;
  void set(int x, int y, bool black);
  [[nodiscard]] const std::vector<bool>& pixels() const noexcept { return pixels_; }
  [[nodiscard]] std::size_t black_count() const;

  /// Top row becomes bottom row.
  [[nodiscard]] BinaryImage flipped_vertically() const;
  /// Left column becomes right column.
  [[nodiscard]] BinaryImage flipped_horizontally() const;
  /// Both flips: a 180 degree rotation.
  [[nodiscard]] BinaryImage rotated_180() const;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  int width_;
  int height_;
  std::vector<bool> pixels_;
};

}  // namespace qsvm

#endif  // QSVM_PREPROCESS_IMAGE_HPP
