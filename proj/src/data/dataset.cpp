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

#include "qsvm/data/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <utility>

#include "qsvm/error.hpp"

namespace qsvm {
namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      cur.push_back(c);
    } else if (c == ',' && !quoted) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::string canonical_column(std::string s) {
  for (auto& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '_' || c == ' ') c = '.';
  }
  return s;
}

std::optional<double> parse_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string species_key(std::string s) {
  s = canonical_column(trim(std::move(s)));
  if (s.rfind("iris-", 0) == 0) s = s.substr(5);
  if (s.rfind("iris.", 0) == 0) s = s.substr(5);
  return s;
}

}  // namespace

std::size_t LabeledDataset::count(Label l) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), l));
}

void LabeledDataset::validate() const {
  if (points.size() != labels.size()) throw DataError("dataset columns have different lengths");
  if (count(Label::kPlus) == 0) throw DataError("dataset '" + name + "' has no +1 points");
  if (count(Label::kMinus) == 0) throw DataError("dataset '" + name + "' has no -1 points");
}

LabeledDataset load_iris(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + " is empty");
  auto header = split_csv(line);
  std::map<std::string, std::size_t> col;
  // The raw UCI file has no header row and a fixed column order.
  const bool headerless = header.size() == 5 && parse_double(header[0]).has_value();
  std::string pending;
  if (headerless) {
    pending = line;
    header = {"sepal.length", "sepal.width", "petal.length", "petal.width", "species"};
  }
  for (std::size_t i = 0; i < header.size(); ++i) col[canonical_column(header[i])] = i;
  for (const char* need : {"sepal.length", "sepal.width", "petal.length", "petal.width", "species"}) {
    if (!col.count(need)) throw DataError(path.string() + ": missing column '" + std::string(need) + "'");
  }
  const std::size_t cw = col["sepal.width"];
  const std::size_t cl = col["petal.length"];
  const std::size_t cs = col["species"];

  LabeledDataset ds;
  ds.name = "iris";
  ds.feature_names = {"sepal.width", "petal.length"};
  std::size_t row = headerless ? 0 : 1;
  while (!pending.empty() || std::getline(in, line)) {
    if (!pending.empty()) line = std::exchange(pending, std::string());
    ++row;
    if (trim(line).empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != header.size()) {
      throw DataError(path.string() + ": row " + std::to_string(row) + " has the wrong number of fields");
    }
    const std::string sp = species_key(f[cs]);
    Label label;
    if (sp == "setosa") {
      label = Label::kPlus;
    } else if (sp == "versicolor") {
      label = Label::kMinus;
    } else if (sp == "virginica") {
      continue;
    } else {
      throw DataError(path.string() + ": unknown species '" + f[cs] + "' in row " + std::to_string(row));
    }
    const auto w = parse_double(f[cw]);
    const auto l = parse_double(f[cl]);
    if (!w || !l) throw DataError(path.string() + ": non-numeric feature in row " + std::to_string(row));
    ds.points.push_back({*w, *l});
    ds.labels.push_back(label);
    ds.sources.push_back("row " + std::to_string(row));
  }
  ds.validate();
  if (ds.size() != 100) {
    ds.warnings.push_back("expected 100 setosa/versicolor rows, found " + std::to_string(ds.size()));
  }
  return ds;
}

BinaryImage parse_pbm(const std::string& text) {
  // Tokenize, dropping comments. Pixel rows may be written without spaces.
  std::string cleaned;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    cleaned += line.substr(0, hash);
    cleaned += '\n';
  }
  std::istringstream in(cleaned);
  std::string magic;
  int w = 0, h = 0;
  if (!(in >> magic) || magic != "P1") throw DataError("not an ASCII PBM (P1) image");
  if (!(in >> w >> h) || w < 1 || h < 1) throw DataError("PBM header has invalid dimensions");
  std::vector<bool> px;
  px.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  char c;
  while (px.size() < px.capacity() && in.get(c)) {
    if (c == '0' || c == '1') {
      px.push_back(c == '1');
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw DataError(std::string("unexpected character '") + c + "' in PBM pixel data");
    }
  }
  if (px.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
    throw DataError("PBM pixel data is truncated");
  }
  return BinaryImage(w, h, std::move(px));
}

BinaryImage read_pbm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pbm(buf.str());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string format_pbm(const BinaryImage& image) {
  std::ostringstream out;
  out << "P1\n" << image.width() << ' ' << image.height() << '\n';
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) out << (image.at(x, y) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

void write_pbm(const std::filesystem::path& path, const BinaryImage& image) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << format_pbm(image);
}

LabeledDataset load_ocr_images(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw DataError(dir.string() + " is not a directory");
  static const std::regex kName(R"(([0-9])_([0-9]+)\.pbm)");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::smatch m;
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || !std::regex_match(name, m, kName)) continue;
    if (m[1] == "6" || m[1] == "9") files.push_back(entry.path());
  }
  if (files.empty()) throw DataError(dir.string() + " holds no 6_*.pbm or 9_*.pbm images");
  std::sort(files.begin(), files.end());

  LabeledDataset ds;
  ds.name = "ocr";
  ds.feature_names = {"HR", "VR"};
  for (const auto& f : files) {
    const BinaryImage img = read_pbm(f);
    const std::string name = f.filename().string();
    try {
      ds.points.push_back(extract_hr_vr(img));
    } catch (const DataError& e) {
      ds.warnings.push_back(name + " skipped: " + e.what());
      continue;
    }
    ds.labels.push_back(name[0] == '6' ? Label::kPlus : Label::kMinus);
    ds.sources.push_back(name);
  }
  ds.validate();
  return ds;
}

std::pair<RawPoint, RawPoint> training_points_from_class_means(const LabeledDataset& ds) {
  std::array<RawPoint, 2> sum{};
  std::array<std::size_t, 2> n{};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::size_t k = ds.labels[i] == Label::kPlus ? 0 : 1;
    sum[k].t1 += ds.points[i].t1;
    sum[k].t2 += ds.points[i].t2;
    ++n[k];
  }
  if (n[0] == 0 || n[1] == 0) throw DataError("class mean needs both classes");
  auto mean = [&](std::size_t k) {
    return RawPoint{sum[k].t1 / static_cast<double>(n[k]), sum[k].t2 / static_cast<double>(n[k])};
  };
  return {mean(0), mean(1)};
}

nlohmann::json dataset_to_json(const LabeledDataset& ds) {
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    pts.push_back({{"t1", ds.points[i].t1},
                   {"t2", ds.points[i].t2},
                   {"label", to_int(ds.labels[i])},
                   {"source", i < ds.sources.size() ? ds.sources[i] : std::string{}}});
  }
  return {{"name", ds.name},
          {"feature_names", ds.feature_names},
          {"points", pts},
          {"warnings", ds.warnings}};
}

}  // namespace qsvm
