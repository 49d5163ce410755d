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


#include "ingb/baselines.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "ingb/errors.h"
#include "ingb/random.h"

namespace ingb {
namespace {

Dataset Blobs(std::size_t majority, std::size_t minority, double gap,
              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x;
  std::vector<int> y;
  for (std::size_t i = 0; i < majority + minority; ++i) {
    const bool minor = i >= majority;
    x.push_back((minor ? gap : 0.0) + rng.Normal());
    x.push_back(rng.Normal());
    y.push_back(minor ? 1 : 0);
  }
  return Dataset(x, 2, y, {"maj", "min"});
}

// Distance from p to the segment [a, b].
double SegmentDistance(std::span<const double> p, std::span<const double> a,
                       std::span<const double> b) {
  double dot = 0, len = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    dot += (p[j] - a[j]) * (b[j] - a[j]);
    len += (b[j] - a[j]) * (b[j] - a[j]);
  }
  double t = len > 0 ? std::clamp(dot / len, 0.0, 1.0) : 0.0;
  double dist = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    double q = a[j] + t * (b[j] - a[j]) - p[j];
    dist += q * q;
  }
  return std::sqrt(dist);
}

TEST(SmoteTest, TwoPointMinorityInterpolatesOnTheDiagonal) {
  Dataset d({5, 5, 6, 5, 5, 6, 0, 0, 1, 1}, 2, {0, 0, 0, 1, 1},
            {"maj", "min"});
  Dataset out = Smote(d, 1, 1, 50, 3);
  ASSERT_EQ(out.num_rows(), 55u);
  for (std::size_t i = 5; i < 55; ++i) {
    EXPECT_EQ(out.label(i), 1);
    EXPECT_TRUE(out.is_synthetic(i));
    EXPECT_NEAR(out.row(i)[0], out.row(i)[1], 1e-12);
    EXPECT_GE(out.row(i)[0], 0.0);
    EXPECT_LE(out.row(i)[0], 1.0);
  }
}

TEST(SmoteTest, EveryPointOnASameClassSegment) {
  Dataset d = Blobs(60, 12, 2.0, 1);
  const auto minority = d.IndicesOfClass(1);
  Dataset out = Smote(d, 5, 1, 48, 9);
  for (std::size_t i = d.num_rows(); i < out.num_rows(); ++i) {
    double best = 1e300;
    for (std::size_t a : minority) {
      for (std::size_t b : minority) {
        if (a != b) {
          best = std::min(best, SegmentDistance(out.row(i), d.row(a), d.row(b)));
        }
      }
    }
    EXPECT_LE(best, 1e-9);
  }
}

TEST(SmoteTest, ZeroDeficitAndContracts) {
  Dataset d = Blobs(10, 3, 2.0, 1);
  EXPECT_EQ(Smote(d, 5, 1, 0, 1).num_rows(), d.num_rows());
  EXPECT_THROW(Smote(d, 0, 1, 5, 1), ContractError);
  Dataset lone({0, 1, 2}, 1, {0, 0, 1}, {"a", "b"});
  EXPECT_THROW(Smote(lone, 5, 1, 2, 1), ContractError);
}

TEST(EnnTest, RemovesPlantedPoint) {
  Dataset d = Blobs(50, 50, 8.0, 2);
  std::vector<int> y(d.labels().begin(), d.labels().end());
  // Row 0 sits near the majority mean; relabel it.
  std::vector<double> x(d.features().begin(), d.features().end());
  x[0] = 0.0;
  x[1] = 0.0;
  y[0] = 1;
  Dataset planted = d.WithFeatures(x).WithLabels(y);
  FilterResult r = EnnFilter(planted);
  EXPECT_TRUE(std::binary_search(r.removed.begin(), r.removed.end(), 0u));
}

TEST(EnnTest, PureDatasetUntouched) {
  Dataset d({0, 1, 2, 3, 4, 5}, 1, {0, 0, 0, 0, 0, 0}, {"a", "b"});
  EXPECT_TRUE(EnnFilter(d).removed.empty());
  Dataset tiny({0, 1, 2}, 1, {0, 1, 0}, {"a", "b"});
  EXPECT_THROW(EnnFilter(tiny), ContractError);
}

TEST(TomekTest, DropsMajorityMemberOfLink) {
  // Rows 3 and 4 are mutual nearest neighbours across classes.
  Dataset d({0, 0.1, 0.2, 10, 10.05, 20, 20.1}, 1, {0, 0, 0, 0, 1, 1, 1},
            {"maj", "min"});
  FilterResult r = TomekFilter(d);
  EXPECT_EQ(r.removed, (std::vector<std::size_t>{3}));
  EXPECT_EQ(r.data.ClassCounts(), (std::vector<std::size_t>{3, 3}));
}

TEST(TomekTest, SeparatedClassesUntouched) {
  Dataset d = Blobs(30, 10, 20.0, 3);
  EXPECT_TRUE(TomekFilter(d).removed.empty());
}

TEST(TomekTest, NeverReducesMinority) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Dataset d = Blobs(60, 15, 1.0, seed);
    FilterResult r = TomekFilter(d);
    EXPECT_EQ(r.data.ClassCounts()[1], 15u);
  }
}

TEST(PipelineTest, Parse) {
  EXPECT_EQ(Pipeline::Parse("enn-ingb").ToString(), "enn-ingb");
  EXPECT_EQ(Pipeline::Parse("tomek-smote").ToString(), "tkl-smote");
  EXPECT_TRUE(Pipeline::Parse("none").empty());
  EXPECT_EQ(Pipeline::Parse("none").ToString(), "none");
  EXPECT_TRUE(Pipeline::Parse("ingb").has_oversampler());
  EXPECT_FALSE(Pipeline::Parse("enn-tkl").has_oversampler());
  EXPECT_THROW(Pipeline::Parse("smote-ingb"), ContractError);
  try {
    Pipeline::Parse("enn-bogus");
    FAIL();
  } catch (const ContractError& e) {
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
}

TEST(PipelineTest, EmptyIsIdentity) {
  Dataset d = Blobs(20, 5, 1.0, 4);
  Dataset out = RunPipeline(d, Pipeline(), {});
  EXPECT_TRUE(std::equal(d.features().begin(), d.features().end(),
                         out.features().begin(), out.features().end()));
}

TEST(PipelineTest, OversamplersBalance) {
  Dataset d = Blobs(80, 12, 2.0, 5);
  for (const char* text : {"smote", "ingb", "enn-ingb", "tkl-smote"}) {
    std::vector<StageReport> report;
    Dataset out = RunPipeline(d, Pipeline::Parse(text), {}, &report);
    auto counts = out.ClassCounts();
    EXPECT_EQ(counts[0], counts[1]) << text;
    EXPECT_EQ(report.size(), Pipeline::Parse(text).stages().size());
    EXPECT_EQ(report.back().rows_after, out.num_rows());
  }
}

TEST(PipelineTest, EnnThenIngbOnCleanBalancedData) {
  Dataset d = Blobs(40, 40, 10.0, 6);
  Dataset out = RunPipeline(d, Pipeline::Parse("enn-ingb"), {});
  EXPECT_EQ(out.num_rows(), 80u);
  EXPECT_EQ(out.SyntheticCount(), 0u);
}

TEST(PipelineTest, OversamplerSurvivesFilteredOutClass) {
  // Two minority rows buried in the majority blob: ENN drops both.
  Dataset d = Blobs(40, 2, 0.0, 7);
  std::vector<double> x(d.features().begin(), d.features().end());
  x[80] = 0.01;
  x[81] = 0.0;
  x[82] = -0.01;
  x[83] = 0.0;
  d = d.WithFeatures(x);
  for (const char* text : {"enn-ingb", "enn-smote"}) {
    Dataset out = RunPipeline(d, Pipeline::Parse(text), {});
    EXPECT_EQ(out.SyntheticCount(), 0u) << text;
  }
}

}  // namespace
}  // namespace ingb
