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

#include "synthaudit/attacks/differencing.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "synthaudit/attacks/clopper_pearson.hpp"
#include "synthaudit/common/error.hpp"
#include "synthaudit/common/parallel.hpp"
#include "synthaudit/data/neighbors.hpp"

namespace synthaudit {

DecisionRule CalibrateRule(const std::vector<double>& observables,
                           const std::vector<bool>& included,
                           double* accuracy) {
  if (observables.size() != included.size() || observables.empty()) {
    Fail(ErrorCode::kInvalidArgument, "calibration needs matching samples");
  }
  std::vector<double> distinct(observables.begin(), observables.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<double> thresholds;
  thresholds.push_back(distinct.front() - 1.0);
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    thresholds.push_back(0.5 * (distinct[i] + distinct[i + 1]));
  }
  thresholds.push_back(distinct.back() + 1.0);

  DecisionRule best;
  std::size_t best_correct = 0;
  bool have_best = false;
  for (Direction dir : {Direction::kAbove, Direction::kBelow}) {
    for (double t : thresholds) {
      const DecisionRule rule{t, dir};
      std::size_t correct = 0;
      for (std::size_t i = 0; i < observables.size(); ++i) {
        if (rule.Accepts(observables[i]) == included[i]) ++correct;
      }
      if (!have_best || correct > best_correct) {
        best = rule;
        best_correct = correct;
        have_best = true;
      }
    }
  }
  if (accuracy) {
    *accuracy = static_cast<double>(best_correct) /
                static_cast<double>(observables.size());
  }
  return best;
}

DifferencingResult DifferencingProbe(const Trainer& trainer,
                                     const Dataset& base,
                                     const TargetRecord& target,
                                     std::size_t trials, const SeededRng& rng,
                                     const ProbeOptions& options) {
  if (trials < 100 || trials % 2 != 0) {
    Fail(ErrorCode::kTooFewTrials,
         "differencing needs an even number of trials >= 100, got " +
             std::to_string(trials));
  }
  if (!(options.ci_level > 0.0 && options.ci_level < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "ci_level must lie in (0, 1)");
  }
  base.schema().ValidateRecord(target.record);
  if (base.Contains(target.record)) {
    Fail(ErrorCode::kTargetInBase, "target record already present in base");
  }
  const Dataset with_target = base.WithRow(target.record);
  const DistanceConfig cfg = options.distance
                                 ? *options.distance
                                 : DistanceConfig::FitRanges({&with_target});
  cfg.CheckCompatible(base.schema());

  std::vector<double> observable(trials);
  std::vector<char> included(trials);
  ParallelFor(trials, [&](std::size_t i) {
    SeededRng round = rng.Substream("round", i);
    const bool in = round.FairCoin();
    SeededRng trainer_rng = round.Substream("trainer");
    const Dataset synth = trainer(in ? with_target : base, trainer_rng);
    observable[i] = static_cast<double>(
        CountWithinRadius(target.record, synth, options.radius, cfg));
    included[i] = in;
  });

  const std::size_t half = trials / 2;
  DifferencingResult result;
  result.ci_level = options.ci_level;
  result.trials = trials;
  result.radius = options.radius;
  result.seed = rng.seed();
  result.stream = rng.stream();
  result.target_label = target.label;

  const std::vector<double> calib_obs(observable.begin(),
                                      observable.begin() + half);
  const std::vector<bool> calib_in(included.begin(), included.begin() + half);
  const bool degenerate =
      std::all_of(calib_obs.begin(), calib_obs.end(),
                  [&](double v) { return v == calib_obs.front(); });
  result.rule =
      CalibrateRule(calib_obs, calib_in, &result.calibration_accuracy);
  for (std::size_t i = half; i < trials; ++i) {
    const bool guess = result.rule.Accepts(observable[i]);
    if (included[i]) {
      ++result.eval_with_target;
      if (!guess) ++result.false_negatives;
    } else {
      ++result.eval_without_target;
      if (guess) ++result.false_positives;
    }
  }
  result.alpha_upper = ClopperPearsonUpper(
      result.false_positives, result.eval_without_target, options.ci_level);
  result.beta_upper = ClopperPearsonUpper(
      result.false_negatives, result.eval_with_target, options.ci_level);
  if (degenerate) {
    result.degenerate_calibration = true;
    result.eps_hat = 0.0;
  } else {
    result.eps_hat = EpsilonLowerBound(result.alpha_upper, result.beta_upper);
  }
  return result;
}

}  // namespace synthaudit
