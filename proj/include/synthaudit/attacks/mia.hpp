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

#ifndef SYNTHAUDIT_ATTACKS_MIA_HPP_
#define SYNTHAUDIT_ATTACKS_MIA_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "synthaudit/attacks/results.hpp"
#include "synthaudit/attacks/trainer.hpp"
#include "synthaudit/data/distance.hpp"

namespace synthaudit {

// Summary of one synthetic dataset as seen by the membership attack:
//   per numeric column:      mean, population standard deviation
//   per categorical column:  relative frequency of every level
//   last entry:              rows within `radius` of the target
// The length depends only on the schema. Throws kEmptyDataset.
std::vector<double> ExtractFeatures(const Dataset& synth, const Record& target,
                                    const DistanceConfig& cfg, double radius);

struct MiaOptions {
  // Rows per shadow training set; 0 selects floor(pool / 2) where the pool is
  // `reference` without copies of the target.
  std::size_t shadow_train_size = 0;
  double radius = 0.05;
  // Defaults to ranges fitted on reference plus target.
  std::optional<DistanceConfig> distance;
};

// Leave-one-out nearest-centroid scores over standardized feature vectors.
// scores[i] = |x_i - c_out| - |x_i - c_in| with centroids computed without
// world i, so a positive score votes "member". Features with zero variance
// across worlds are dropped.
std::vector<double> LeaveOneOutCentroidScores(
    const std::vector<std::vector<double>>& features,
    const std::vector<bool>& member);

// Mann-Whitney AUC of scores for members versus non-members; ties count 1/2.
double RocAuc(const std::vector<double>& scores,
              const std::vector<bool>& member);

// Shadow-model membership inference. World j includes the target when j is
// even: its training set is shadow_train_size - 1 pool rows plus the target;
// odd worlds draw shadow_train_size pool rows. The trainer's output is
// featurized and the worlds are classified leave-one-out.
//
// Requires n_shadow >= 20 and even (kInvalidArgument) and a pool of at least
// 2 * shadow_train_size rows (kReferenceTooSmall).
MiaResult MiaShadow(const Trainer& trainer, const Dataset& reference,
                    const TargetRecord& target, std::size_t n_shadow,
                    const SeededRng& rng, const MiaOptions& options = {});

}  // namespace synthaudit

#endif  // SYNTHAUDIT_ATTACKS_MIA_HPP_
