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


#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ingb_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome Run(const std::string& args) {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string command = std::string("'") + INGB_CLI_PATH + "' " +
                                args + " > '" + out.string() + "' 2> '" +
                                err.string() + "'";
    const int status = std::system(command.c_str());
    Outcome o;
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.out = Slurp(out);
    o.err = Slurp(err);
    return o;
  }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::string MakeData(const std::string& generator, int m) {
    const std::string path = Path(generator + ".csv");
    Outcome o = Run("gen " + generator + " --m " + std::to_string(m) +
                    " --seed 1 --out " + path);
    EXPECT_EQ(o.code, 0) << o.err;
    return path;
  }

  fs::path dir_;
};

std::size_t CountLines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

TEST_F(CliTest, GenClassCounts) {
  Outcome o = Run("gen blobs2 --m 1100 --seed 1");
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  std::size_t majority = 0, minority = 0;
  while (std::getline(in, line)) {
    if (line.ends_with(",majority")) ++majority;
    if (line.ends_with(",minority")) ++minority;
  }
  EXPECT_EQ(majority, 1000u);
  EXPECT_EQ(minority, 100u);
  EXPECT_EQ(Run("gen blobs2 --m 1100 --seed 1").out, o.out);
  EXPECT_NE(Run("gen blobs2 --m 1100 --seed 2").out, o.out);
}

TEST_F(CliTest, GenUnknownGenerator) {
  EXPECT_EQ(Run("gen spiral").code, 2);
}

TEST_F(CliTest, ResampleIsDeterministicAndBalanced) {
  const std::string data = MakeData("blobs2", 330);
  Outcome a = Run("resample --in " + data + " --out " + Path("a.csv") +
                  " --pipeline ingb --seed 7");
  ASSERT_EQ(a.code, 0) << a.err;
  Outcome b = Run("resample --in " + data + " --out " + Path("b.csv") +
                  " --pipeline ingb --seed 7");
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(Slurp(Path("a.csv")), Slurp(Path("b.csv")));

  nlohmann::json summary = nlohmann::json::parse(a.out);
  EXPECT_EQ(summary["class_counts_out"]["majority"],
            summary["class_counts_out"]["minority"]);
  EXPECT_EQ(summary["rows_out"].get<std::size_t>(),
            CountLines(Slurp(Path("a.csv"))) - 1);

  // Original rows come back verbatim, in order, flagged 0.
  std::istringstream original(Slurp(data));
  std::istringstream resampled(Slurp(Path("a.csv")));
  std::string x, y;
  std::getline(original, x);
  std::getline(resampled, y);
  EXPECT_EQ(y, x + ",synthetic");
  while (std::getline(original, x)) {
    ASSERT_TRUE(std::getline(resampled, y));
    EXPECT_EQ(y, x + ",0");
  }
}

TEST_F(CliTest, ResampleEnnIngbReportsRemovals) {
  const std::string data = MakeData("blobs2", 330);
  Outcome o = Run("resample --in " + data + " --out " + Path("o.csv") +
                  " --pipeline enn-ingb --seed-plan " + Path("plan.json") +
                  " --ball-dump " + Path("balls.jsonl"));
  ASSERT_EQ(o.code, 0) << o.err;
  nlohmann::json summary = nlohmann::json::parse(o.out);
  ASSERT_EQ(summary["stages"].size(), 2u);
  EXPECT_EQ(summary["stages"][0]["stage"], "enn");
  EXPECT_TRUE(summary["stages"][0].contains("removed"));
  EXPECT_EQ(summary["class_counts_out"]["majority"],
            summary["class_counts_out"]["minority"]);
  EXPECT_TRUE(fs::exists(Path("plan.json")));
  EXPECT_GT(CountLines(Slurp(Path("balls.jsonl"))), 0u);
}

TEST_F(CliTest, MissingInputIsIoError) {
  Outcome o = Run("resample --in " + Path("nope.csv") + " --out " +
                  Path("out.csv"));
  EXPECT_EQ(o.code, 1);
  EXPECT_FALSE(fs::exists(Path("out.csv")));
  EXPECT_FALSE(fs::exists(Path("out.csv.tmp")));
}

TEST_F(CliTest, NoiseRates) {
  const std::string data = MakeData("blobs2", 220);
  Outcome zero = Run("noise --in " + data + " --out " + Path("z.csv") +
                     " --noise-rate 0");
  ASSERT_EQ(zero.code, 0) << zero.err;
  EXPECT_EQ(Slurp(Path("z.csv")), Slurp(data));

  Outcome a = Run("noise --in " + data + " --out " + Path("a.csv") +
                  " --noise-rate 0.2 --seed 4");
  Outcome b = Run("noise --in " + data + " --out " + Path("b.csv") +
                  " --noise-rate 0.2 --seed 4");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(Slurp(Path("a.csv")), Slurp(Path("b.csv")));
  nlohmann::json flips = nlohmann::json::parse(Slurp(Path("a.csv.flips.json")));
  EXPECT_EQ(flips["count"], 40 + 4);

  EXPECT_EQ(Run("noise --in " + data + " --out " + Path("c.csv") +
                " --noise-rate 0.31")
                .code,
            2);
}

TEST_F(CliTest, EvaluateReportShape) {
  const std::string data = MakeData("blobs2", 330);
  Outcome o = Run("evaluate --in " + data + " --pipeline none --folds 3");
  ASSERT_EQ(o.code, 0) << o.err;
  nlohmann::json report = nlohmann::json::parse(o.out);
  EXPECT_EQ(report["num_folds"], 3);
  EXPECT_EQ(report["per_fold"].size(), 3u);
  for (const auto& fold : report["per_fold"]) {
    EXPECT_EQ(fold["metrics"].size(), 2u);
    EXPECT_EQ(fold["metrics"]["knn"].size(), 6u);
    EXPECT_EQ(fold["metrics"]["logreg"].size(), 6u);
  }

  Outcome csv = Run("evaluate --in " + data +
                    " --pipeline smote --folds 3 --format csv");
  ASSERT_EQ(csv.code, 0) << csv.err;
  // header + folds x classifiers x metrics + (2 + 1) x metrics x (mean, std)
  EXPECT_EQ(CountLines(csv.out), 1u + 3 * 2 * 6 + 3 * 6 * 2);
}

TEST_F(CliTest, InvalidPipelineNamesToken) {
  const std::string data = MakeData("blobs2", 220);
  Outcome o = Run("evaluate --in " + data + " --pipeline enn-magic");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("magic"), std::string::npos) << o.err;
}

TEST_F(CliTest, BadFlagsAreContractErrors) {
  const std::string data = MakeData("blobs2", 220);
  EXPECT_EQ(Run("resample --in " + data + " --out " + Path("o.csv") +
                " --T 1.5")
                .code,
            2);
  EXPECT_EQ(Run("resample --in " + data + " --out " + Path("o.csv") +
                " --p 0.5")
                .code,
            2);
  EXPECT_EQ(Run("frobnicate").code, 2);
}

TEST_F(CliTest, BenchShapeAndDeterminism) {
  const std::string data = MakeData("blobs2", 220);
  Outcome a = Run("bench --in " + data + " --folds 3 --seed 5");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(CountLines(a.out), 1u + 4 * 5 * 2 * 6);
  EXPECT_TRUE(a.out.starts_with("noise_rate,pipeline,classifier,metric,mean,std\n"));
  Outcome b = Run("bench --in " + data + " --folds 3 --seed 5");
  EXPECT_EQ(a.out, b.out);
  Outcome c = Run("bench --in " + data + " --folds 3 --seed 6");
  EXPECT_NE(a.out, c.out);
}

}  // namespace
