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

#ifndef INGB_RANDOM_H_
#define INGB_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace ingb {

// Seeded generator with distribution code written out explicitly so that
// identical seeds give identical streams regardless of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform();

  // Uniform in {0, ..., n - 1}; n must be positive.
  std::size_t UniformIndex(std::size_t n);

  // Standard normal (Marsaglia polar method).
  double Normal();

  // Independent stream for `stream` under root `seed` (SplitMix64 mixing).
  static std::uint64_t Derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ingb

#endif  // INGB_RANDOM_H_
