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

#ifndef SYNTHAUDIT_GENERATORS_LEAKY_HPP_
#define SYNTHAUDIT_GENERATORS_LEAKY_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "json.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/rng.hpp"

namespace synthaudit {

// Deliberately non-private generators used as audit fixtures.

// Publishes the held-out test set verbatim.
struct CopyTest {};

// Publishes the k train rows farthest from the train centroid, each with
// N(0, perturb_sigma^2) noise on numeric columns, plus filler_count copies of
// filler_value. An unset filler_value means 0.0 for numeric columns and level
// 0 for categorical ones; for two numeric columns that is (0, 0).
struct OutlierLeak {
  std::size_t k = 3;
  double perturb_sigma = 0.05;
  std::size_t filler_count = 70;
  std::optional<Record> filler_value;
};

// Memorizing model: a random permutation of the train rows with
// N(0, resample_sigma^2) noise on numeric columns. With sigma 0 every train
// row is released exactly once.
struct Overfit {
  double resample_sigma = 0.0;
};

// The two-record neighboring pair used as a worst-case DP fixture.
struct TwoRecordWorstCase {
  Record target;
  Record other;
};

using LeakySpec = std::variant<CopyTest, OutlierLeak, Overfit, TwoRecordWorstCase>;

// Throws kVariantPreconditionFailed when the variant's inputs are unusable.
Dataset GenerateLeaky(const LeakySpec& spec, const Dataset& train,
                      const Dataset& test, SeededRng& rng);

// Indices of the k rows with the largest centroid distance, farthest first
// (ties to the lower index). The distance is Euclidean over z-scored numeric
// columns plus 1 per categorical column that differs from the column mode;
// zero-variance numeric columns are skipped.
std::vector<std::size_t> CentroidOutliers(const Dataset& data, std::size_t k);

nlohmann::json LeakySpecToJson(const LeakySpec& spec,
                               const TabularSchema& schema);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_GENERATORS_LEAKY_HPP_
