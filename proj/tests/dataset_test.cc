// Copyright 2026 The INGB Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ingb/dataset.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ingb/errors.h"
#include "ingb/random.h"

namespace ingb {
namespace {

Dataset Imbalanced(std::size_t majority, std::size_t minority) {
  std::vector<double> x;
  std::vector<int> y;
  for (std::size_t i = 0; i < majority + minority; ++i) {
    x.push_back(static_cast<double>(i));
    x.push_back(static_cast<double>(i % 7));
    y.push_back(i < majority ? 0 : 1);
  }
  return Dataset(x, 2, y, {"maj", "min"});
}

TEST(DatasetTest, ConstructorContracts) {
  EXPECT_THROW(Dataset({}, 1, {}, {"a", "b"}), ContractError);
  EXPECT_THROW(Dataset({1.0}, 1, {0}, {"a"}), ContractError);
  EXPECT_THROW(Dataset({1.0}, 1, {2}, {"a", "b"}), ContractError);
  EXPECT_THROW(Dataset({1.0, 2.0}, 1, {0}, {"a", "b"}), ContractError);
  EXPECT_THROW(Dataset({std::nan("")}, 1, {0}, {"a", "b"}), ContractError);
}

TEST(DatasetTest, ClassQueries) {
  Dataset d = Imbalanced(6, 3);
  EXPECT_EQ(d.ClassCounts(), (std::vector<std::size_t>{6, 3}));
  EXPECT_EQ(d.LargestClass(), 0);
  EXPECT_EQ(d.SmallestClass(), 1);
  EXPECT_EQ(d.IndicesOfClass(1), (std::vector<std::size_t>{6, 7, 8}));

  std::vector<double> extra{1.0, 2.0};
  std::vector<int> extra_labels{1};
  Dataset appended = d.Append(extra, extra_labels);
  EXPECT_EQ(appended.num_rows(), 10u);
  EXPECT_EQ(appended.SyntheticCount(), 1u);
  EXPECT_TRUE(appended.is_synthetic(9));
  EXPECT_FALSE(appended.is_synthetic(0));
}

TEST(CsvTest, ReadBack) {
  std::istringstream in("x,y,label\n1,2,a\n3,4,a\n5,6,b\n7,8,b\n");
  Dataset d = ReadCsv(in);
  EXPECT_EQ(d.num_rows(), 4u);
  EXPECT_EQ(d.num_features(), 2u);
  EXPECT_EQ(d.num_classes(), 2u);
  EXPECT_EQ(d.class_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_DOUBLE_EQ(d.row(2)[1], 6.0);
  EXPECT_EQ(d.label(3), 1);
}

TEST(CsvTest, NamedLabelColumn) {
  std::istringstream in("cls,x\nb,1\na,2\nb,3\na,4\n");
  Dataset d = ReadCsv(in, "cls");
  EXPECT_EQ(d.num_features(), 1u);
  EXPECT_EQ(d.schema().label_position, 0u);
  EXPECT_EQ(d.class_names()[0], "b");
}

TEST(CsvTest, NonNumericCellNamesLocation) {
  std::istringstream in("x,y,label\n1,2,a\n3,oops,a\n5,6,b\n7,8,b\n");
  try {
    ReadCsv(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 3u);
    EXPECT_EQ(e.column(), 2u);
    EXPECT_NE(std::string(e.what()).find("oops"), std::string::npos);
  }
}

TEST(CsvTest, SingleClassRejected) {
  std::istringstream in("x,label\n1,a\n2,a\n3,a\n");
  EXPECT_THROW(ReadCsv(in), ContractError);
}

TEST(CsvTest, MissingFileIsIoError) {
  EXPECT_THROW(LoadCsv("/nonexistent/file.csv"), IoError);
}

TEST(CsvTest, WriteReadRoundTrip) {
  std::vector<double> x{0.1, -2.5e-7, 1.0 / 3.0, 12345.678, 1e300, -0.0};
  Dataset d(x, 2, {0, 1, 1}, {"neg", "pos"});
  d = d.WithLabels({0, 1, 0});
  std::vector<double> more{7.0, 8.0};
  std::vector<int> more_labels{1};
  d = d.Append(more, more_labels);
  std::ostringstream out;
  WriteCsv(out, d, false);
  std::istringstream in(out.str());
  Dataset back = ReadCsv(in);
  ASSERT_EQ(back.num_rows(), d.num_rows());
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(back.row(i)[j], d.row(i)[j]);
    EXPECT_EQ(back.class_names()[back.label(i)], d.class_names()[d.label(i)]);
  }
}

TEST(ScalerTest, Examples) {
  Dataset d({2, 7, 0.0, 4, 7, 0.5, 6, 7, 1.0}, 3, {0, 1, 0}, {"a", "b"});
  Dataset s = ScaleMinMax(d).data;
  EXPECT_DOUBLE_EQ(s.row(0)[0], 0.0);
  EXPECT_DOUBLE_EQ(s.row(1)[0], 0.5);
  EXPECT_DOUBLE_EQ(s.row(2)[0], 1.0);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(s.row(i)[1], 0.0);
    EXPECT_DOUBLE_EQ(s.row(i)[2], d.row(i)[2]);
  }
}

TEST(ScalerTest, InverseRecoversInput) {
  Rng rng(11);
  std::vector<double> x;
  std::vector<int> y;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 4; ++j) x.push_back(rng.Normal() * 100.0 + j);
    y.push_back(i % 2);
  }
  Dataset d(x, 4, y, {"a", "b"});
  ScaledDataset scaled = ScaleMinMax(d);
  Dataset back = scaled.scaler.Inverse(scaled.data);
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_GE(scaled.data.row(i)[j], 0.0);
      EXPECT_LE(scaled.data.row(i)[j], 1.0);
      EXPECT_NEAR(back.row(i)[j], d.row(i)[j], 1e-9);
    }
  }
}

TEST(NoiseTest, ZeroRateIsIdentity) {
  Dataset d = Imbalanced(100, 10);
  NoisyDataset noisy = InjectLabelNoise(d, {0.0, 3});
  EXPECT_TRUE(noisy.flipped.empty());
  EXPECT_TRUE(std::equal(d.labels().begin(), d.labels().end(),
                         noisy.data.labels().begin()));
}

TEST(NoiseTest, FlipsFloorOfRatePerClass) {
  Dataset d = Imbalanced(100, 10);
  NoisyDataset noisy = InjectLabelNoise(d, {0.1, 3});
  ASSERT_EQ(noisy.flipped.size(), 11u);
  std::size_t majority_flips = 0;
  for (std::size_t i : noisy.flipped) {
    EXPECT_NE(noisy.data.label(i), d.label(i));
    if (d.label(i) == 0) ++majority_flips;
  }
  EXPECT_EQ(majority_flips, 10u);
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    bool flipped = std::binary_search(noisy.flipped.begin(),
                                      noisy.flipped.end(), i);
    EXPECT_EQ(flipped, noisy.data.label(i) != d.label(i));
  }
}

TEST(NoiseTest, SeededAndBounded) {
  Dataset d = Imbalanced(100, 10);
  EXPECT_EQ(InjectLabelNoise(d, {0.2, 9}).flipped,
            InjectLabelNoise(d, {0.2, 9}).flipped);
  EXPECT_NE(InjectLabelNoise(d, {0.2, 9}).flipped,
            InjectLabelNoise(d, {0.2, 10}).flipped);
  EXPECT_THROW(InjectLabelNoise(d, {0.31, 9}), ContractError);
  EXPECT_THROW(InjectLabelNoise(d, {-0.1, 9}), ContractError);
}

TEST(NoiseTest, MultiClassTargetsOtherClasses) {
  std::vector<double> x(90);
  std::vector<int> y;
  for (int i = 0; i < 90; ++i) y.push_back(i / 30);
  Dataset d(x, 1, y, {"a", "b", "c"});
  NoisyDataset noisy = InjectLabelNoise(d, {0.3, 4});
  EXPECT_EQ(noisy.flipped.size(), 27u);
}

TEST(FoldsTest, StratifiedExactDivision) {
  Dataset d = Imbalanced(100, 10);
  FoldPlan plan = StratifiedFolds(d, 10, 5);
  std::set<std::size_t> seen;
  for (int f = 0; f < 10; ++f) {
    std::vector<std::size_t> test = plan.TestIndices(f);
    std::size_t minority = 0;
    for (std::size_t i : test) {
      minority += d.label(i) == 1;
      EXPECT_TRUE(seen.insert(i).second);
    }
    EXPECT_EQ(test.size(), 11u);
    EXPECT_EQ(minority, 1u);
    EXPECT_EQ(plan.TrainIndices(f).size(), 99u);
  }
  EXPECT_EQ(seen.size(), 110u);
}

TEST(FoldsTest, UnevenSizesDifferByAtMostOne) {
  Dataset d = Imbalanced(53, 17);
  FoldPlan plan = StratifiedFolds(d, 4, 1);
  std::size_t lo = 1000, hi = 0;
  for (int f = 0; f < 4; ++f) {
    lo = std::min(lo, plan.TestIndices(f).size());
    hi = std::max(hi, plan.TestIndices(f).size());
  }
  EXPECT_LE(hi - lo, 1u);
}

TEST(FoldsTest, Contracts) {
  EXPECT_THROW(StratifiedFolds(Imbalanced(100, 9), 10, 1), ContractError);
  EXPECT_THROW(StratifiedFolds(Imbalanced(100, 10), 1, 1), ContractError);
  EXPECT_EQ(StratifiedFolds(Imbalanced(40, 10), 5, 8).assignments,
            StratifiedFolds(Imbalanced(40, 10), 5, 8).assignments);
}

}  // namespace
}  // namespace ingb
