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

#include "synthaudit/data/rng.hpp"

#include <cmath>
#include <numbers>

#include "synthaudit/common/error.hpp"

namespace synthaudit {
namespace {

std::uint64_t Fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::string_view stream)
    : seed_(seed),
      stream_(stream),
      engine_(SplitMix64(seed ^ SplitMix64(Fnv1a64(stream)))) {}

SeededRng SeededRng::Substream(std::string_view label) const {
  std::string name = stream_;
  name += '/';
  name += label;
  return SeededRng(seed_, name);
}

SeededRng SeededRng::Substream(std::string_view label,
                               std::uint64_t index) const {
  std::string name = stream_;
  name += '/';
  name += label;
  name += '#';
  name += std::to_string(index);
  return SeededRng(seed_, name);
}

std::uint64_t SeededRng::NextU64() { return engine_(); }

double SeededRng::Uniform01() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

double SeededRng::UniformOpen01() {
  return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t SeededRng::UniformInt(std::uint64_t bound) {
  if (bound == 0) Fail(ErrorCode::kInvalidArgument, "UniformInt bound is 0");
  // Largest multiple of bound representable; reject draws above it.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = NextU64();
  } while (x >= limit);
  return x % bound;
}

bool SeededRng::FairCoin() { return (NextU64() >> 63) != 0; }

double SeededRng::StandardNormal() {
  if (spare_normal_) {
    double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  const double u1 = UniformOpen01();
  const double u2 = UniformOpen01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

}  // namespace synthaudit
