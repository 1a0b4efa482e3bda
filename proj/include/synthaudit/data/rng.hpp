// Copyright 2026 The Synthaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNTHAUDIT_DATA_RNG_HPP_
#define SYNTHAUDIT_DATA_RNG_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace synthaudit {

// Deterministic random source identified by (seed, stream label).
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Its initial state is derived by hashing the stream label with
// FNV-1a and mixing it with the seed through SplitMix64. All derived
// quantities (uniform reals, bounded integers, normals) are computed here
// rather than through <random> distributions, whose algorithms vary between
// standard library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::string_view stream = "root");

  std::uint64_t seed() const { return seed_; }
  const std::string& stream() const { return stream_; }

  // Independent child stream "<stream>/<label>" (or "<stream>/<label>#<i>").
  // Deriving a child does not advance this generator.
  SeededRng Substream(std::string_view label) const;
  SeededRng Substream(std::string_view label, std::uint64_t index) const;

  std::uint64_t NextU64();
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform on the open interval (0, 1).
  double UniformOpen01();
  // Uniform integer in [0, bound); bound must be positive. Uses rejection so
  // the result is exactly uniform.
  std::uint64_t UniformInt(std::uint64_t bound);
  bool FairCoin();
  // Standard normal via the Box-Muller transform on two UniformOpen01 draws;
  // the second variate of each pair is cached and returned by the next call.
  double StandardNormal();

 private:
  std::uint64_t seed_;
  std::string stream_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace synthaudit

#endif  // SYNTHAUDIT_DATA_RNG_HPP_
