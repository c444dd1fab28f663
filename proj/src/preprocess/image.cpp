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

#include "qsvm/preprocess/image.hpp"

#include <algorithm>

#include "qsvm/error.hpp"

namespace qsvm {

BinaryImage::BinaryImage(int width, int height, std::vector<bool> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1) throw InvalidArgument("image dimensions must be positive");
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw InvalidArgument("pixel count does not match width * height");
  }
}

BinaryImage::BinaryImage(int width, int height)
    : BinaryImage(width, height,
                  std::vector<bool>(static_cast<std::size_t>(std::max(width, 0)) *
                                        static_cast<std::size_t>(std::max(height, 0)),
                                    false)) {}

bool BinaryImage::at(int x, int y) const {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) throw InvalidArgument("pixel out of range");
  return pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)];
}

void BinaryImage::set(int x, int y, bool black) {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) throw InvalidArgument("pixel out of range");
  pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)] = black;
}

std::size_t BinaryImage::black_count() const {
  return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), true));
}

BinaryImage BinaryImage::flipped_vertically() const {
  BinaryImage out(width_, height_);
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) out.set(x, height_ - 1 - y, at(x, y));
  }
  return out;
}

BinaryImage BinaryImage::flipped_horizontally() const {
  BinaryImage out(width_, height_);
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) out.set(width_ - 1 - x, y, at(x, y));
  }
  return out;
}

BinaryImage BinaryImage::rotated_180() const { return flipped_vertically().flipped_horizontally(); }

}  // namespace qsvm
