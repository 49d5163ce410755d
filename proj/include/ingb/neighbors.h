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

#ifndef INGB_NEIGHBORS_H_
#define INGB_NEIGHBORS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ingb/dataset.h"

namespace ingb {

// Brute-force Euclidean k-nearest neighbours of `query` among `candidates`
// (row indices of `d`), nearest first. Distance ties go to the smaller row
// index. `exclude` is skipped when it names a candidate.
std::vector<std::size_t> NearestNeighbors(
    const Dataset& d, std::span<const double> query,
    std::span<const std::size_t> candidates, std::size_t k,
    std::size_t exclude = static_cast<std::size_t>(-1));

// Same over all rows of `d`.
std::vector<std::size_t> NearestNeighbors(
    const Dataset& d, std::span<const double> query, std::size_t k,
    std::size_t exclude = static_cast<std::size_t>(-1));

}  // namespace ingb

#endif  // INGB_NEIGHBORS_H_
