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

#ifndef SYNTHAUDIT_DATA_SAMPLING_HPP_
#define SYNTHAUDIT_DATA_SAMPLING_HPP_

#include <cstddef>
#include <utility>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/rng.hpp"

namespace synthaudit {

// Two numeric columns "x" and "y" declared on [-5, 5].
TabularSchema Gaussian2dSchema();

// n rows of i.i.d. standard normal coordinates; row i takes the Box-Muller
// pair (x, y) from the i-th pair of uniforms. Draws beyond [-5, 5] are kept
// as-is (they occur with probability below 1e-6 per coordinate).
Dataset Gaussian2dSample(std::size_t n, SeededRng& rng);

// Fisher-Yates permutation under rng, then the first ceil(n/2) rows form the
// train set and the rest the test set.
std::pair<Dataset, Dataset> SplitTrainTest(const Dataset& d, SeededRng& rng);

// Uniformly random subset of `count` distinct indices from [0, n), in draw
// order (partial Fisher-Yates).
std::vector<std::size_t> SampleWithoutReplacement(std::size_t n,
                                                  std::size_t count,
                                                  SeededRng& rng);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_DATA_SAMPLING_HPP_
