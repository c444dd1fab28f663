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

#include "qsvm/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qsvm::cli {
namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 40.0;

struct Frame {
  double x0, x1, y0, y1;

  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kCanvas - 2 * kMargin); }
  double py(double y) const { return kCanvas - kMargin - (y - y0) / (y1 - y0) * (kCanvas - 2 * kMargin); }
};

Frame frame_for(const std::vector<ScatterPoint>& a, const std::vector<ScatterPoint>& b, bool unit_circle) {
  Frame f{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
          std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
  auto grow = [&f](double x, double y) {
    f.x0 = std::min(f.x0, x);
    f.x1 = std::max(f.x1, x);
    f.y0 = std::min(f.y0, y);
    f.y1 = std::max(f.y1, y);
  };
  for (const auto& p : a) grow(p.x, p.y);
  for (const auto& p : b) grow(p.x, p.y);
  if (unit_circle) {
    grow(-1.0, -1.0);
    grow(1.0, 1.0);
  }
  if (f.x0 > f.x1) f = {-1.0, 1.0, -1.0, 1.0};
  const double pad_x = std::max(0.05 * (f.x1 - f.x0), 1e-3);
  const double pad_y = std::max(0.05 * (f.y1 - f.y0), 1e-3);
  return {f.x0 - pad_x, f.x1 + pad_x, f.y0 - pad_y, f.y1 + pad_y};
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string scatter_svg(const std::string& title, const std::vector<ScatterPoint>& points,
                        const std::vector<ScatterPoint>& highlighted,
                        std::optional<std::array<double, 2>> line_direction, bool unit_circle) {
  const Frame f = frame_for(points, highlighted, unit_circle);
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kCanvas / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">"
      << escape(title) << "</text>\n";
  if (f.x0 < 0.0 && f.x1 > 0.0) {
    out << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(f.y0) << "\" x2=\"" << f.px(0) << "\" y2=\""
        << f.py(f.y1) << "\" stroke=\"#bbb\"/>\n";
  }
  if (f.y0 < 0.0 && f.y1 > 0.0) {
    out << "<line x1=\"" << f.px(f.x0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(f.x1) << "\" y2=\""
        << f.py(0) << "\" stroke=\"#bbb\"/>\n";
  }
  if (unit_circle) {
    out << "<ellipse cx=\"" << f.px(0) << "\" cy=\"" << f.py(0) << "\" rx=\"" << f.px(1) - f.px(0)
        << "\" ry=\"" << f.py(0) - f.py(1) << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (line_direction) {
    const double s = 2.0 * std::max({std::abs(f.x0), std::abs(f.x1), std::abs(f.y0), std::abs(f.y1)});
    const auto& d = *line_direction;
    out << "<line x1=\"" << f.px(-s * d[0]) << "\" y1=\"" << f.py(-s * d[1]) << "\" x2=\"" << f.px(s * d[0])
        << "\" y2=\"" << f.py(s * d[1]) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& p : points) {
    out << "<circle cx=\"" << f.px(p.x) << "\" cy=\"" << f.py(p.y) << "\" r=\"3\" fill=\""
        << (p.label > 0 ? "#1f77b4" : "#d62728") << "\" fill-opacity=\"0.7\"/>\n";
  }
  for (const auto& p : highlighted) {
    out << "<rect x=\"" << f.px(p.x) - 5 << "\" y=\"" << f.py(p.y) - 5 << "\" width=\"10\" height=\"10\" fill=\""
        << (p.label > 0 ? "#1f77b4" : "#d62728") << "\" stroke=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qsvm::cli
