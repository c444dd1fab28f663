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

#include <gtest/gtest.h>

#include <cmath>

#include "qsvm/data/dataset.hpp"
#include "qsvm/data/glyphs.hpp"
#include "qsvm/error.hpp"
#include "temp_dir.hpp"

namespace qsvm {
namespace {

using testing::TempDir;

const std::filesystem::path kData = QSVM_TEST_DATA_DIR;

TEST(Iris, BundledFileHasFiftyPerClass) {
  const LabeledDataset ds = load_iris(kData / "iris.csv");
  EXPECT_EQ(ds.size(), 100u);
  EXPECT_EQ(ds.count(Label::kPlus), 50u);
  EXPECT_EQ(ds.count(Label::kMinus), 50u);
  EXPECT_TRUE(ds.warnings.empty());
}

TEST(Iris, FirstUciRowSelectsWidthAndPetalLength) {
  TempDir dir;
  const auto p = dir.write("iris.data", "5.1,3.5,1.4,0.2,Iris-setosa\n7.0,3.2,4.7,1.4,Iris-versicolor\n");
  const LabeledDataset ds = load_iris(p);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_DOUBLE_EQ(ds.points[0].t1, 3.5);
  EXPECT_DOUBLE_EQ(ds.points[0].t2, 1.4);
  EXPECT_EQ(ds.labels[0], Label::kPlus);
  EXPECT_EQ(ds.labels[1], Label::kMinus);
  EXPECT_FALSE(ds.warnings.empty());
}

TEST(Iris, HeaderVariantsAreAccepted) {
  TempDir dir;
  const auto p = dir.write("iris.csv",
                           "Sepal_Length,Sepal_Width,Petal_Length,Petal_Width,Species\n"
                           "5.1,3.5,1.4,0.2,setosa\n6.4,3.2,4.5,1.5,versicolor\n6.3,3.3,6.0,2.5,virginica\n");
  EXPECT_EQ(load_iris(p).size(), 2u);
}

TEST(Iris, MissingClassIsAnError) {
  TempDir dir;
  const auto p = dir.write("v.csv", "sepal.length,sepal.width,petal.length,petal.width,species\n"
                                    "6.3,3.3,6.0,2.5,virginica\n");
  EXPECT_THROW(load_iris(p), DataError);
  EXPECT_THROW(load_iris(dir.path() / "absent.csv"), DataError);
  EXPECT_THROW(load_iris(dir.write("e.csv", "")), DataError);
  EXPECT_THROW(load_iris(dir.write("u.csv", "5.1,3.5,1.4,0.2,rose\n")), DataError);
}

TEST(ClassMeans, TwoPointsPerClass) {
  LabeledDataset ds;
  ds.points = {{1, 1}, {3, 3}, {5, 5}, {7, 7}};
  ds.labels = {Label::kPlus, Label::kPlus, Label::kMinus, Label::kMinus};
  const auto [plus, minus] = training_points_from_class_means(ds);
  EXPECT_DOUBLE_EQ(plus.t1, 2.0);
  EXPECT_DOUBLE_EQ(minus.t2, 6.0);
}

TEST(ClassMeans, SinglePointClasses) {
  LabeledDataset ds;
  ds.points = {{0.5, 2}, {4, 1}};
  ds.labels = {Label::kMinus, Label::kPlus};
  const auto [plus, minus] = training_points_from_class_means(ds);
  EXPECT_DOUBLE_EQ(plus.t1, 4.0);
  EXPECT_DOUBLE_EQ(minus.t1, 0.5);
}

TEST(ClassMeans, IrisMatchesIndependentSums) {
  const LabeledDataset ds = load_iris(kData / "iris.csv");
  double s[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const int k = ds.labels[i] == Label::kPlus ? 0 : 1;
    s[k][0] += ds.points[i].t1;
    s[k][1] += ds.points[i].t2;
  }
  const auto [plus, minus] = training_points_from_class_means(ds);
  EXPECT_NEAR(plus.t1, s[0][0] / 50, 1e-12);
  EXPECT_NEAR(plus.t2, s[0][1] / 50, 1e-12);
  EXPECT_NEAR(minus.t1, s[1][0] / 50, 1e-12);
  EXPECT_NEAR(minus.t2, s[1][1] / 50, 1e-12);
  // Published UCI class means.
  EXPECT_NEAR(plus.t1, 3.428, 1e-9);
  EXPECT_NEAR(minus.t2, 4.26, 1e-9);
}

TEST(Pbm, RoundTrip) {
  BinaryImage img(3, 2);
  img.set(0, 0, true);
  img.set(2, 1, true);
  const std::string text = format_pbm(img);
  EXPECT_EQ(parse_pbm(text), img);
  EXPECT_EQ(parse_pbm("P1\n# comment\n3 2\n1 0 0\n0 0 1\n"), img);
  EXPECT_THROW(parse_pbm("P4\n1 1\n0"), DataError);
  EXPECT_THROW(parse_pbm("P1\n2 2\n1 0 1"), DataError);
}

TEST(Ocr, BundledCorpusHasTwoHundredImages) {
  const LabeledDataset ds = load_ocr_images(kData / "ocr");
  EXPECT_EQ(ds.size(), 200u);
  EXPECT_EQ(ds.count(Label::kPlus), 100u);
  EXPECT_EQ(ds.count(Label::kMinus), 100u);
}

TEST(Ocr, EmptyDirectoryIsAnError) {
  TempDir dir;
  EXPECT_THROW(load_ocr_images(dir.path()), DataError);
  dir.write("readme.txt", "nothing");
  EXPECT_THROW(load_ocr_images(dir.path()), DataError);
}

TEST(Ocr, LoaderLabelsByDigitPrefix) {
  TempDir dir;
  write_pbm(dir.path() / "6_000.pbm", printed_glyph(6));
  write_pbm(dir.path() / "9_000.pbm", printed_glyph(9));
  write_pbm(dir.path() / "3_000.pbm", printed_glyph(9));
  const LabeledDataset ds = load_ocr_images(dir.path());
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds.labels[0], Label::kPlus);
  EXPECT_EQ(ds.labels[1], Label::kMinus);
}

TEST(Glyphs, NineIsTheRotatedSix) {
  EXPECT_EQ(printed_glyph(9), printed_glyph(6).rotated_180());
  EXPECT_THROW(printed_glyph(7), InvalidArgument);
  const RawPoint six = extract_hr_vr(printed_glyph(6));
  const RawPoint nine = extract_hr_vr(printed_glyph(9));
  EXPECT_NEAR(six.t1 * nine.t1, 1.0, 1e-12);
  EXPECT_NEAR(six.t2 * nine.t2, 1.0, 1e-12);
}

TEST(Glyphs, PrintedSixMapsNearTheFirstTarget) {
  const UnitPoint u = normalize(ocr_linear_map(extract_hr_vr(printed_glyph(6))));
  EXPECT_NEAR(u.x1, 0.987, 0.01);
  EXPECT_NEAR(u.x2, 0.159, 0.01);
}

TEST(Glyphs, JitterIsSeeded) {
  const GlyphStyle a = jittered_style(1, 6, 3);
  const GlyphStyle b = jittered_style(1, 6, 3);
  const GlyphStyle c = jittered_style(2, 6, 3);
  EXPECT_EQ(a.loop_cx, b.loop_cx);
  EXPECT_NE(a.loop_cx, c.loop_cx);
}

}  // namespace
}  // namespace qsvm
