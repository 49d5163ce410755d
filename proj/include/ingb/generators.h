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

#ifndef INGB_GENERATORS_H_
#define INGB_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ingb/dataset.h"

namespace ingb {

// Seeded synthetic benchmarks:
//   blobs2   two 2-d Gaussian blobs, imbalance ratio 10
//   blobs3   three 2-d Gaussian blobs, counts 10:1:1
//   ring     2-d majority annulus around a minority core, ratio 10
//   highdim  two 20-d Gaussian blobs, ratio 10
// Throws ContractError for an unknown name or m too small to hold every
// class.
Dataset GenerateDataset(const std::string& name, std::size_t m,
                        std::uint64_t seed);

const std::vector<std::string>& GeneratorNames();

}  // namespace ingb

#endif  // INGB_GENERATORS_H_
