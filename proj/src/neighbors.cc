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

#include "ingb/neighbors.h"

#include <algorithm>
#include <utility>

#include "ingb/geometry.h"

namespace ingb {

std::vector<std::size_t> NearestNeighbors(
    const Dataset& d, std::span<const double> query,
    std::span<const std::size_t> candidates, std::size_t k,
    std::size_t exclude) {
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(candidates.size());
  for (std::size_t i : candidates) {
    if (i == exclude) continue;
    scored.emplace_back(SquaredEuclidean(query, d.row(i)), i);
  }
  k = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + k, scored.end());
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = scored[i].second;
  return out;
}

std::vector<std::size_t> NearestNeighbors(const Dataset& d,
                                          std::span<const double> query,
                                          std::size_t k, std::size_t exclude) {
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(d.num_rows());
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    if (i == exclude) continue;
    scored.emplace_back(SquaredEuclidean(query, d.row(i)), i);
  }
  k = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + k, scored.end());
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = scored[i].second;
  return out;
}

}  // namespace ingb
