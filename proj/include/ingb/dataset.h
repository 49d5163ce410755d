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

#ifndef INGB_DATASET_H_
#define INGB_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ingb {

// Column names carried through from CSV input so output files keep the same
// header layout.
struct Schema {
  std::vector<std::string> feature_names;
  std::string label_name = "label";
  // Position of the label column among all input columns.
  std::size_t label_position = 0;
};

// Immutable m x n feature matrix (row-major) with class-index labels.
//
// Invariants, checked on construction: at least one row, at least two class
// names, every label indexes class_names, every feature finite. Rows appended
// by an oversampler are flagged synthetic.
class Dataset {
 public:
  Dataset(std::vector<double> features, std::size_t num_features,
          std::vector<int> labels, std::vector<std::string> class_names,
          std::string provenance = "", std::vector<std::uint8_t> synthetic = {},
          std::optional<Schema> schema = std::nullopt);

  std::size_t num_rows() const { return labels_.size(); }
  std::size_t num_features() const { return num_features_; }
  std::size_t num_classes() const { return class_names_.size(); }

  std::span<const double> row(std::size_t i) const {
    return {features_.data() + i * num_features_, num_features_};
  }
  int label(std::size_t i) const { return labels_[i]; }
  bool is_synthetic(std::size_t i) const { return synthetic_[i] != 0; }

  std::span<const double> features() const { return features_; }
  std::span<const int> labels() const { return labels_; }
  std::span<const std::uint8_t> synthetic_flags() const { return synthetic_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::string& provenance() const { return provenance_; }
  const Schema& schema() const { return schema_; }

  std::vector<std::size_t> ClassCounts() const;
  std::vector<std::size_t> IndicesOfClass(int c) const;
  std::size_t SyntheticCount() const;

  // Class with the most (fewest) rows; ties go to the smaller index. Classes
  // with no rows are ignored by SmallestClass.
  int LargestClass() const;
  int SmallestClass() const;

  Dataset Subset(std::span<const std::size_t> rows) const;
  Dataset WithLabels(std::vector<int> labels) const;
  Dataset WithFeatures(std::vector<double> features) const;
  Dataset WithProvenance(std::string provenance) const;

  // Returns a copy with the given rows appended and flagged synthetic.
  Dataset Append(std::span<const double> features,
                 std::span<const int> labels) const;

 private:
  std::vector<double> features_;
  std::size_t num_features_;
  std::vector<int> labels_;
  std::vector<std::string> class_names_;
  std::string provenance_;
  std::vector<std::uint8_t> synthetic_;
  Schema schema_;
};

// ---------------------------------------------------------------------------
// CSV input/output.

// Reads a comma-separated file with a header row. `label_column` selects the
// label by name; empty means the last column. Class names are ordered by
// first appearance. Throws IoError if the file cannot be opened, ParseError
// for malformed cells, ContractError if fewer than two classes are present or
// a class has fewer than two rows.
Dataset LoadCsv(const std::string& path, const std::string& label_column = "");
Dataset ReadCsv(std::istream& in, const std::string& label_column = "",
                const std::string& provenance = "");

// Writes the header (schema order, label in its original position) followed
// by a trailing `synthetic` 0/1 column when `with_synthetic_column` is set.
void WriteCsv(std::ostream& out, const Dataset& d,
              bool with_synthetic_column = true);

// Shortest round-trip decimal representation.
std::string FormatDouble(double v);

// ---------------------------------------------------------------------------
// Min-max scaling.

class MinMaxScaler {
 public:
  static MinMaxScaler Fit(const Dataset& d);

  // Maps each feature affinely onto [0, 1] using the fitted table. Constant
  // features map to 0.
  Dataset Transform(const Dataset& d) const;
  std::vector<double> InverseRow(std::span<const double> row) const;
  Dataset Inverse(const Dataset& d) const;

  const std::vector<double>& mins() const { return mins_; }
  const std::vector<double>& maxs() const { return maxs_; }

 private:
  std::vector<double> mins_;
  std::vector<double> maxs_;
};

struct ScaledDataset {
  Dataset data;
  MinMaxScaler scaler;
};

ScaledDataset ScaleMinMax(const Dataset& d);

// ---------------------------------------------------------------------------
// Label noise.

struct NoiseSpec {
  double rate = 0.0;  // in [0, 0.3]
  std::uint64_t seed = 42;
};

inline constexpr double kMaxNoiseRate = 0.3;

struct NoisyDataset {
  Dataset data;
  std::vector<std::size_t> flipped;  // ascending row indices
};

// For each class c, floor(rate * count(c)) rows chosen uniformly without
// replacement get a label drawn uniformly from the other classes.
NoisyDataset InjectLabelNoise(const Dataset& d, const NoiseSpec& spec);

// ---------------------------------------------------------------------------
// Stratified folds.

struct FoldPlan {
  int k_folds = 10;
  std::vector<int> assignments;  // row -> fold index
  std::uint64_t seed = 0;

  std::vector<std::size_t> TestIndices(int fold) const;
  std::vector<std::size_t> TrainIndices(int fold) const;
};

FoldPlan StratifiedFolds(const Dataset& d, int k_folds, std::uint64_t seed);

}  // namespace ingb

#endif  // INGB_DATASET_H_
