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

#include "qsvm/data/glyphs.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qsvm/data/dataset.hpp"
#include "qsvm/error.hpp"

namespace qsvm {
namespace {

struct Pen {
  BinaryImage& img;
  double radius;

  void dot(double x, double y) {
    const int n = img.width();
    const int x0 = static_cast<int>(std::floor(x - radius));
    const int x1 = static_cast<int>(std::ceil(x + radius));
    const int y0 = static_cast<int>(std::floor(y - radius));
    const int y1 = static_cast<int>(std::ceil(y + radius));
    for (int py = std::max(0, y0); py <= std::min(n - 1, y1); ++py) {
      for (int px = std::max(0, x0); px <= std::min(n - 1, x1); ++px) {
        const double dx = px + 0.5 - x;
        const double dy = py + 0.5 - y;
        if (dx * dx + dy * dy <= radius * radius) img.set(px, py, true);
      }
    }
  }
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

BinaryImage render_digit(int digit, const GlyphStyle& s) {
  if (digit != 6 && digit != 9) throw InvalidArgument("only the digits 6 and 9 can be rendered");
  if (s.size < 8) throw InvalidArgument("glyph canvas is too small");
  BinaryImage img(s.size, s.size);
  const double n = s.size;
  Pen pen{img, std::max(0.5, s.thickness * n)};
  auto plot = [&](double u, double v) {
    // Shear so that the top leans right for positive slant.
    pen.dot((u + s.slant * (0.5 - v)) * n, v * n);
  };
  constexpr int kSteps = 720;
  for (int i = 0; i < kSteps; ++i) {
    const double t = 2.0 * std::numbers::pi * i / kSteps;
    plot(s.loop_cx + s.loop_rx * std::cos(t), s.loop_cy + s.loop_ry * std::sin(t));
  }
  // Quadratic Bezier from the loop's leftmost point up to the top hook.
  const double p0x = s.loop_cx - s.loop_rx, p0y = s.loop_cy;
  const double p1x = p0x - s.stem_bulge, p1y = s.stem_top + 0.3 * (s.loop_cy - s.stem_top);
  const double p2x = p0x + s.stem_reach, p2y = s.stem_top;
  for (int i = 0; i <= kSteps; ++i) {
    const double t = static_cast<double>(i) / kSteps;
    const double a = (1 - t) * (1 - t), b = 2 * (1 - t) * t, c = t * t;
    plot(a * p0x + b * p1x + c * p2x, a * p0y + b * p1y + c * p2y);
  }
  return digit == 6 ? img : img.rotated_180();
}

GlyphStyle printed_style() {
  GlyphStyle s;
  s.loop_cx = 0.52;
  s.loop_cy = 0.70;
  s.loop_rx = 0.22;
  s.loop_ry = 0.22;
  s.stem_top = 0.08;
  s.stem_bulge = 0.04;
  s.stem_reach = 0.30;
  return s;
}

BinaryImage printed_glyph(int digit) { return render_digit(digit, printed_style()); }

GlyphStyle jittered_style(std::uint64_t seed, int digit, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(digit), static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  GlyphStyle s = printed_style();
  s.loop_cx = uniform(rng, 0.46, 0.58);
  s.loop_cy = uniform(rng, 0.62, 0.74);
  s.loop_rx = uniform(rng, 0.16, 0.28);
  s.loop_ry = uniform(rng, 0.18, 0.28);
  s.stem_top = uniform(rng, 0.15, 0.45);
  s.stem_bulge = uniform(rng, 0.0, 0.10);
  s.stem_reach = uniform(rng, 0.10, 0.35);
  s.slant = uniform(rng, -0.15, 0.15);
  s.thickness = uniform(rng, 0.04, 0.07);
  return s;
}

void write_synthetic_ocr_corpus(const std::filesystem::path& dir, int per_digit, std::uint64_t seed) {
  if (per_digit < 1) throw InvalidArgument("per_digit must be positive");
  std::filesystem::create_directories(dir);
  for (int digit : {6, 9}) {
    for (int i = 0; i < per_digit; ++i) {
      const auto name = std::to_string(digit) + "_" + std::to_string(i) + ".pbm";
      write_pbm(dir / name, render_digit(digit, jittered_style(seed, digit, i)));
    }
  }
}

}  // namespace qsvm
