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

#include "ingb/generators.h"

#include <cmath>
#include <numbers>
#include <utility>

#include "ingb/errors.h"
#include "ingb/random.h"

namespace ingb {
namespace {

struct Blob {
  std::vector<double> center;
  double sigma;
};

// Row-major samples of an isotropic Gaussian blob.
void SampleBlob(const Blob& blob, std::size_t count, int label, Rng& rng,
                std::vector<double>& features, std::vector<int>& labels) {
  for (std::size_t i = 0; i < count; ++i) {
    for (double c : blob.center) features.push_back(c + blob.sigma * rng.Normal());
    labels.push_back(label);
  }
}

void SampleRing(double radius, double width, std::size_t count, int label,
                Rng& rng, std::vector<double>& features,
                std::vector<int>& labels) {
  for (std::size_t i = 0; i < count; ++i) {
    const double angle = 2.0 * std::numbers::pi * rng.Uniform();
    const double r = radius + width * rng.Normal();
    features.push_back(r * std::cos(angle));
    features.push_back(r * std::sin(angle));
    labels.push_back(label);
  }
}

// Shuffles rows so the file order carries no class information.
Dataset Shuffled(std::vector<double> features, std::size_t n,
                 std::vector<int> labels, std::vector<std::string> names,
                 const std::string& provenance, Rng& rng) {
  const std::size_t m = labels.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  for (std::size_t i = m; i > 1; --i) {
    std::swap(order[i - 1], order[rng.UniformIndex(i)]);
  }
  std::vector<double> f;
  std::vector<int> y;
  f.reserve(features.size());
  y.reserve(m);
  for (std::size_t i : order) {
    f.insert(f.end(), features.begin() + i * n, features.begin() + (i + 1) * n);
    y.push_back(labels[i]);
  }
  return Dataset(std::move(f), n, std::move(y), std::move(names), provenance);
}

std::size_t ShareOf(std::size_t m, double fraction) {
  return static_cast<std::size_t>(std::llround(static_cast<double>(m) * fraction));
}

}  // namespace

const std::vector<std::string>& GeneratorNames() {
  static const std::vector<std::string> kNames = {"blobs2", "blobs3", "ring",
                                                  "highdim"};
  return kNames;
}

Dataset GenerateDataset(const std::string& name, std::size_t m,
                        std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> features;
  std::vector<int> labels;
  const std::string provenance = "gen:" + name + ":seed=" + std::to_string(seed);

  if (name == "blobs2" || name == "highdim") {
    const std::size_t n = name == "blobs2" ? 2 : 20;
    const std::size_t minority = ShareOf(m, 1.0 / 11.0);
    if (minority < 2 || m - minority < 2) {
      throw ContractError("m too small for generator " + name);
    }
    const double offset = name == "blobs2" ? 2.5 : 0.8;
    Blob majority{std::vector<double>(n, 0.0), 1.0};
    Blob minor{std::vector<double>(n, 0.0), 0.6};
    if (name == "blobs2") {
      minor.center[0] = offset;
    } else {
      for (double& c : minor.center) c = offset;
    }
    SampleBlob(majority, m - minority, 0, rng, features, labels);
    SampleBlob(minor, minority, 1, rng, features, labels);
    return Shuffled(std::move(features), n, std::move(labels),
                    {"majority", "minority"}, provenance, rng);
  }
  if (name == "blobs3") {
    const std::size_t small = ShareOf(m, 1.0 / 12.0);
    if (small < 2 || m < 2 * small + 2) {
      throw ContractError("m too small for generator " + name);
    }
    SampleBlob({{0.0, 0.0}, 1.0}, m - 2 * small, 0, rng, features, labels);
    SampleBlob({{2.5, 0.0}, 0.6}, small, 1, rng, features, labels);
    SampleBlob({{0.0, 2.5}, 0.6}, small, 2, rng, features, labels);
    return Shuffled(std::move(features), 2, std::move(labels),
                    {"majority", "minority_a", "minority_b"}, provenance, rng);
  }
  if (name == "ring") {
    const std::size_t minority = ShareOf(m, 1.0 / 11.0);
    if (minority < 2 || m - minority < 2) {
      throw ContractError("m too small for generator " + name);
    }
    SampleRing(2.5, 0.4, m - minority, 0, rng, features, labels);
    SampleBlob({{0.0, 0.0}, 0.6}, minority, 1, rng, features, labels);
    return Shuffled(std::move(features), 2, std::move(labels), {"ring", "core"},
                    provenance, rng);
  }
  throw ContractError("unknown generator '" + name +
                      "' (expected blobs2, blobs3, ring or highdim)");
}

}  // namespace ingb
