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

#include "synthaudit/data/sampling.hpp"

#include <numeric>
#include <vector>

#include "synthaudit/common/error.hpp"

namespace synthaudit {

TabularSchema Gaussian2dSchema() {
  return TabularSchema({{"x", NumericKind{-5.0, 5.0}},
                        {"y", NumericKind{-5.0, 5.0}}});
}

Dataset Gaussian2dSample(std::size_t n, SeededRng& rng) {
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "sample size must be >= 1");
  std::vector<Record> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.StandardNormal();
    const double y = rng.StandardNormal();
    rows.push_back({x, y});
  }
  return Dataset(Gaussian2dSchema(), std::move(rows));
}

std::vector<std::size_t> SampleWithoutReplacement(std::size_t n,
                                                  std::size_t count,
                                                  SeededRng& rng) {
  if (count > n) {
    Fail(ErrorCode::kInvalidArgument, "cannot draw more items than available");
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.UniformInt(n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  return idx;
}

std::pair<Dataset, Dataset> SplitTrainTest(const Dataset& d, SeededRng& rng) {
  if (d.n() < 2) {
    Fail(ErrorCode::kTooFewRows, "split needs at least 2 rows");
  }
  const auto perm = SampleWithoutReplacement(d.n(), d.n(), rng);
  const std::size_t n_train = (d.n() + 1) / 2;
  std::span<const std::size_t> all(perm);
  return {d.Subset(all.first(n_train)), d.Subset(all.subspan(n_train))};
}

}  // namespace synthaudit
