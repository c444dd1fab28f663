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

#include <iostream>

#include "CLI11.hpp"
#include "qsvm/data/glyphs.hpp"
#include "qsvm/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Render a synthetic corpus of handwritten-style 6 and 9 glyphs as PBM files"};
  std::string dir = "data/ocr";
  int per_digit = 100;
  std::uint64_t seed = 20191015;
  app.add_option("--output-dir", dir);
  app.add_option("--per-digit", per_digit)->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);
  try {
    qsvm::write_synthetic_ocr_corpus(dir, per_digit, seed);
  } catch (const qsvm::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  std::cout << "wrote " << 2 * per_digit << " images to " << dir << '\n';
  return 0;
}
