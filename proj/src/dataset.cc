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
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "ingb/errors.h"
#include "ingb/random.h"

namespace ingb {
namespace {

Schema DefaultSchema(std::size_t num_features) {
  Schema schema;
  schema.feature_names.reserve(num_features);
  for (std::size_t j = 0; j < num_features; ++j) {
    schema.feature_names.push_back("x" + std::to_string(j));
  }
  schema.label_position = num_features;
  return schema;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits one CSV record. Double-quoted fields may contain commas; a doubled
// quote inside a quoted field is a literal quote.
std::vector<std::string> SplitRecord(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(Trim(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.emplace_back(Trim(current));
  return fields;
}

std::string QuoteIfNeeded(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Dataset::Dataset(std::vector<double> features, std::size_t num_features,
                 std::vector<int> labels, std::vector<std::string> class_names,
                 std::string provenance, std::vector<std::uint8_t> synthetic,
                 std::optional<Schema> schema)
    : features_(std::move(features)),
      num_features_(num_features),
      labels_(std::move(labels)),
      class_names_(std::move(class_names)),
      provenance_(std::move(provenance)),
      synthetic_(std::move(synthetic)),
      schema_(schema ? std::move(*schema) : DefaultSchema(num_features)) {
  if (labels_.empty()) throw ContractError("dataset must have at least 1 row");
  if (num_features_ == 0) {
    throw ContractError("dataset must have at least 1 feature");
  }
  if (features_.size() != labels_.size() * num_features_) {
    throw ContractError("feature matrix size does not match rows x features");
  }
  if (class_names_.size() < 2) {
    throw ContractError("dataset needs at least 2 class names");
  }
  const int k = static_cast<int>(class_names_.size());
  for (int y : labels_) {
    if (y < 0 || y >= k) {
      throw ContractError("label index " + std::to_string(y) +
                          " out of range for " + std::to_string(k) +
                          " classes");
    }
  }
  for (double v : features_) {
    if (!std::isfinite(v)) throw ContractError("non-finite feature value");
  }
  if (synthetic_.empty()) synthetic_.assign(labels_.size(), 0);
  if (synthetic_.size() != labels_.size()) {
    throw ContractError("synthetic flag vector length mismatch");
  }
  if (schema_.feature_names.size() != num_features_) {
    throw ContractError("schema feature names do not match feature count");
  }
}

std::vector<std::size_t> Dataset::ClassCounts() const {
  std::vector<std::size_t> counts(class_names_.size(), 0);
  for (int y : labels_) ++counts[y];
  return counts;
}

std::vector<std::size_t> Dataset::IndicesOfClass(int c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == c) out.push_back(i);
  }
  return out;
}

std::size_t Dataset::SyntheticCount() const {
  return static_cast<std::size_t>(
      std::count(synthetic_.begin(), synthetic_.end(), std::uint8_t{1}));
}

int Dataset::LargestClass() const {
  const auto counts = ClassCounts();
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) -
                          counts.begin());
}

int Dataset::SmallestClass() const {
  const auto counts = ClassCounts();
  int best = -1;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] == 0) continue;
    if (best < 0 || counts[c] < counts[best]) best = static_cast<int>(c);
  }
  return best;
}

Dataset Dataset::Subset(std::span<const std::size_t> rows) const {
  std::vector<double> features;
  features.reserve(rows.size() * num_features_);
  std::vector<int> labels;
  std::vector<std::uint8_t> synthetic;
  labels.reserve(rows.size());
  synthetic.reserve(rows.size());
  for (std::size_t r : rows) {
    if (r >= num_rows()) throw ContractError("subset row out of range");
    const auto x = row(r);
    features.insert(features.end(), x.begin(), x.end());
    labels.push_back(labels_[r]);
    synthetic.push_back(synthetic_[r]);
  }
  return Dataset(std::move(features), num_features_, std::move(labels),
                 class_names_, provenance_, std::move(synthetic), schema_);
}

Dataset Dataset::WithLabels(std::vector<int> labels) const {
  return Dataset(features_, num_features_, std::move(labels), class_names_,
                 provenance_, synthetic_, schema_);
}

Dataset Dataset::WithFeatures(std::vector<double> features) const {
  return Dataset(std::move(features), num_features_, labels_, class_names_,
                 provenance_, synthetic_, schema_);
}

Dataset Dataset::WithProvenance(std::string provenance) const {
  return Dataset(features_, num_features_, labels_, class_names_,
                 std::move(provenance), synthetic_, schema_);
}

Dataset Dataset::Append(std::span<const double> features,
                        std::span<const int> labels) const {
  if (features.size() != labels.size() * num_features_) {
    throw ContractError("appended rows do not match feature count");
  }
  std::vector<double> all_features = features_;
  all_features.insert(all_features.end(), features.begin(), features.end());
  std::vector<int> all_labels = labels_;
  all_labels.insert(all_labels.end(), labels.begin(), labels.end());
  std::vector<std::uint8_t> synthetic = synthetic_;
  synthetic.resize(all_labels.size(), 1);
  return Dataset(std::move(all_features), num_features_, std::move(all_labels),
                 class_names_, provenance_, std::move(synthetic), schema_);
}

// ---------------------------------------------------------------------------

Dataset LoadCsv(const std::string& path, const std::string& label_column) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return ReadCsv(in, label_column, path);
}

Dataset ReadCsv(std::istream& in, const std::string& label_column,
                const std::string& provenance) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header row", 1, 0);
  const std::vector<std::string> header = SplitRecord(line);
  if (header.size() < 2) {
    throw ParseError("header needs a label and at least one feature", 1, 0);
  }
  std::size_t label_pos = header.size() - 1;
  if (!label_column.empty()) {
    const auto it = std::find(header.begin(), header.end(), label_column);
    if (it == header.end()) {
      throw ParseError("label column '" + label_column + "' not in header", 1,
                       0);
    }
    label_pos = static_cast<std::size_t>(it - header.begin());
  }

  Schema schema;
  schema.label_name = header[label_pos];
  schema.label_position = label_pos;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j != label_pos) schema.feature_names.push_back(header[j]);
  }
  const std::size_t n = schema.feature_names.size();

  std::vector<double> features;
  std::vector<int> labels;
  std::vector<std::string> class_names;
  std::unordered_map<std::string, int> class_index;
  std::size_t row_number = 1;
  while (std::getline(in, line)) {
    ++row_number;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> fields = SplitRecord(line);
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) +
                           " fields, found " + std::to_string(fields.size()),
                       row_number, fields.size());
    }
    for (std::size_t j = 0; j < fields.size(); ++j) {
      const std::string& cell = fields[j];
      if (j == label_pos) {
        if (cell.empty()) throw ParseError("empty label", row_number, j + 1);
        auto [it, inserted] =
            class_index.emplace(cell, static_cast<int>(class_names.size()));
        if (inserted) class_names.push_back(cell);
        labels.push_back(it->second);
        continue;
      }
      double value = 0.0;
      const char* first = cell.data();
      const char* last = first + cell.size();
      if (!cell.empty() && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (cell.empty() || ec != std::errc() || ptr != last ||
          !std::isfinite(value)) {
        throw ParseError("non-numeric feature cell '" + cell + "' in column '" +
                             header[j] + "'",
                         row_number, j + 1);
      }
      features.push_back(value);
    }
  }
  if (labels.empty()) throw ParseError("no data rows", row_number, 0);
  if (class_names.size() < 2) {
    throw ContractError("input has a single class '" + class_names.front() +
                        "'; at least two classes are required");
  }
  std::vector<std::size_t> counts(class_names.size(), 0);
  for (int y : labels) ++counts[y];
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] < 2) {
      throw ContractError("class '" + class_names[c] + "' has only " +
                          std::to_string(counts[c]) +
                          " instance; every class needs at least 2");
    }
  }
  return Dataset(std::move(features), n, std::move(labels),
                 std::move(class_names), provenance, {}, std::move(schema));
}

std::string FormatDouble(double v) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

void WriteCsv(std::ostream& out, const Dataset& d,
              bool with_synthetic_column) {
  const Schema& schema = d.schema();
  const std::size_t columns = d.num_features() + 1;
  const std::size_t label_pos = std::min(schema.label_position, columns - 1);

  std::string line;
  for (std::size_t j = 0, f = 0; j < columns; ++j) {
    if (j > 0) line.push_back(',');
    line += QuoteIfNeeded(j == label_pos ? schema.label_name
                                         : schema.feature_names[f++]);
  }
  if (with_synthetic_column) line += ",synthetic";
  out << line << '\n';

  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    line.clear();
    const auto x = d.row(i);
    for (std::size_t j = 0, f = 0; j < columns; ++j) {
      if (j > 0) line.push_back(',');
      if (j == label_pos) {
        line += QuoteIfNeeded(d.class_names()[d.label(i)]);
      } else {
        line += FormatDouble(x[f++]);
      }
    }
    if (with_synthetic_column) line += d.is_synthetic(i) ? ",1" : ",0";
    out << line << '\n';
  }
}

// ---------------------------------------------------------------------------

MinMaxScaler MinMaxScaler::Fit(const Dataset& d) {
  MinMaxScaler s;
  const std::size_t n = d.num_features();
  s.mins_.assign(n, 0.0);
  s.maxs_.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    s.mins_[j] = s.maxs_[j] = d.row(0)[j];
  }
  for (std::size_t i = 1; i < d.num_rows(); ++i) {
    const auto x = d.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      s.mins_[j] = std::min(s.mins_[j], x[j]);
      s.maxs_[j] = std::max(s.maxs_[j], x[j]);
    }
  }
  return s;
}

Dataset MinMaxScaler::Transform(const Dataset& d) const {
  const std::size_t n = d.num_features();
  if (n != mins_.size()) throw ContractError("scaler dimension mismatch");
  std::vector<double> out(d.features().begin(), d.features().end());
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double range = maxs_[j] - mins_[j];
      double& v = out[i * n + j];
      v = range > 0.0 ? (v - mins_[j]) / range : 0.0;
    }
  }
  return d.WithFeatures(std::move(out));
}

std::vector<double> MinMaxScaler::InverseRow(
    std::span<const double> row) const {
  if (row.size() != mins_.size()) {
    throw ContractError("scaler dimension mismatch");
  }
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = mins_[j] + row[j] * (maxs_[j] - mins_[j]);
  }
  return out;
}

Dataset MinMaxScaler::Inverse(const Dataset& d) const {
  std::vector<double> out;
  out.reserve(d.features().size());
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    const auto x = InverseRow(d.row(i));
    out.insert(out.end(), x.begin(), x.end());
  }
  return d.WithFeatures(std::move(out));
}

ScaledDataset ScaleMinMax(const Dataset& d) {
  MinMaxScaler scaler = MinMaxScaler::Fit(d);
  Dataset scaled = scaler.Transform(d);
  return {std::move(scaled), std::move(scaler)};
}

// ---------------------------------------------------------------------------

NoisyDataset InjectLabelNoise(const Dataset& d, const NoiseSpec& spec) {
  if (!(spec.rate >= 0.0 && spec.rate <= kMaxNoiseRate)) {
    throw ContractError("noise rate must lie in [0, 0.3], got " +
                        FormatDouble(spec.rate));
  }
  Rng rng(spec.seed);
  const int k = static_cast<int>(d.num_classes());
  std::vector<int> labels(d.labels().begin(), d.labels().end());
  std::vector<std::size_t> flipped;
  for (int c = 0; c < k; ++c) {
    std::vector<std::size_t> members = d.IndicesOfClass(c);
    // The small slack absorbs products such as 0.1 * 30 = 3.0000000000000004
    // landing just below an integer.
    const auto quota = static_cast<std::size_t>(
        std::floor(spec.rate * static_cast<double>(members.size()) + 1e-9));
    // Partial Fisher-Yates: the first `quota` slots are a uniform sample.
    for (std::size_t i = 0; i < quota; ++i) {
      const std::size_t j = i + rng.UniformIndex(members.size() - i);
      std::swap(members[i], members[j]);
      int target = static_cast<int>(rng.UniformIndex(k - 1));
      if (target >= c) ++target;
      labels[members[i]] = target;
      flipped.push_back(members[i]);
    }
  }
  std::sort(flipped.begin(), flipped.end());
  return {d.WithLabels(std::move(labels)), std::move(flipped)};
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> FoldPlan::TestIndices(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::TrainIndices(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

FoldPlan StratifiedFolds(const Dataset& d, int k_folds, std::uint64_t seed) {
  if (k_folds < 2) throw ContractError("need at least 2 folds");
  const auto counts = d.ClassCounts();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0 && counts[c] < static_cast<std::size_t>(k_folds)) {
      throw ContractError("class '" + d.class_names()[c] + "' has " +
                          std::to_string(counts[c]) + " instances, fewer than " +
                          std::to_string(k_folds) + " folds");
    }
  }
  FoldPlan plan;
  plan.k_folds = k_folds;
  plan.seed = seed;
  plan.assignments.assign(d.num_rows(), -1);
  Rng rng(seed);
  // Classes deal round-robin into folds; the starting fold carries over
  // between classes so fold sizes stay within one of each other overall.
  std::size_t offset = 0;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    std::vector<std::size_t> members = d.IndicesOfClass(static_cast<int>(c));
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[rng.UniformIndex(i)]);
    }
    for (std::size_t j = 0; j < members.size(); ++j) {
      plan.assignments[members[j]] =
          static_cast<int>((offset + j) % static_cast<std::size_t>(k_folds));
    }
    offset += members.size();
  }
  return plan;
}

}  // namespace ingb
