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

#ifndef QSVM_DATA_GLYPHS_HPP
#define QSVM_DATA_GLYPHS_HPP

#include <cstdint>
#include <filesystem>

#include "qsvm/preprocess/image.hpp"

namespace qsvm {

/// Geometry of a '6': an elliptic loop in the lower part of the canvas and
/// a curved stem rising from the loop's left side. A '9' is the same
/// stroke set rotated by 180 degrees. Lengths are fractions of the canvas.
struct GlyphStyle {
  int size = 32;
  double loop_cx = 0.5;
  double loop_cy = 0.66;
  double loop_rx = 0.22;
  double loop_ry = 0.18;
  double stem_top = 0.12;
  double stem_bulge = 0.08;
  double stem_reach = 0.18;
  double slant = 0.0;
  double thickness = 0.055;
};

BinaryImage render_digit(int digit, const GlyphStyle& style);

/// Style of the printed training glyphs.
GlyphStyle printed_style();

BinaryImage printed_glyph(int digit);

/// Random handwriting-like variation of the printed style.
GlyphStyle jittered_style(std::uint64_t seed, int digit, int index);

/// Writes `per_digit` sixes and nines as 6_<i>.pbm / 9_<i>.pbm.
void write_synthetic_ocr_corpus(const std::filesystem::path& dir, int per_digit, std::uint64_t seed);

}  // namespace qsvm

#endif  // QSVM_DATA_GLYPHS_HPP
