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

#ifndef SYNTHAUDIT_ATTACKS_DIFFERENCING_HPP_
#define SYNTHAUDIT_ATTACKS_DIFFERENCING_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "synthaudit/attacks/results.hpp"
#include "synthaudit/attacks/trainer.hpp"
#include "synthaudit/data/distance.hpp"

namespace synthaudit {

struct ProbeOptions {
  // Synthetic rows within this normalized distance of the target are counted.
  double radius = 0.05;
  double ci_level = 0.95;
  // Defaults to ranges fitted on base plus target.
  std::optional<DistanceConfig> distance;
};

// Threshold rule with the highest accuracy on (observable, included) pairs.
// Candidates are every midpoint between consecutive distinct observables plus
// one point below the minimum and one above the maximum, in both directions;
// ties keep the first candidate in (kAbove, then kBelow) x ascending
// threshold order.
DecisionRule CalibrateRule(const std::vector<double>& observables,
                           const std::vector<bool>& included,
                           double* accuracy = nullptr);

// Two-world distinguishing game. Each round flips a fair coin between
// D0 = base and D1 = base + target, runs the trainer, and records how many
// synthetic rows fall within the radius of the target. The first half of the
// rounds calibrates a DecisionRule, the second half is scored, and the
// evaluation error counts are turned into an epsilon lower bound through
// one-sided Clopper-Pearson bounds at ci_level.
//
// Requires trials >= 100 and even (kTooFewTrials) and a target absent from
// base (kTargetInBase). Round i draws from rng.Substream("round", i), so the
// result is independent of thread count.
DifferencingResult DifferencingProbe(const Trainer& trainer,
                                     const Dataset& base,
                                     const TargetRecord& target,
                                     std::size_t trials, const SeededRng& rng,
                                     const ProbeOptions& options = {});

}  // namespace synthaudit

#endif  // SYNTHAUDIT_ATTACKS_DIFFERENCING_HPP_
