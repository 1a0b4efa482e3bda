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

#include "synthaudit/attacks/mia.hpp"

#include <cmath>
#include <string>

#include "synthaudit/common/error.hpp"
#include "synthaudit/common/parallel.hpp"
#include "synthaudit/data/neighbors.hpp"
#include "synthaudit/data/sampling.hpp"

namespace synthaudit {
namespace {

double Euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sq += d * d;
  }
  return std::sqrt(sq);
}

}  // namespace

std::vector<double> ExtractFeatures(const Dataset& synth, const Record& target,
                                    const DistanceConfig& cfg, double radius) {
  RequireNonEmpty(synth, "extract_features");
  const TabularSchema& schema = synth.schema();
  const double n = static_cast<double>(synth.n());
  std::vector<double> features;
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (schema.column(c).is_numeric()) {
      double mean = 0.0;
      for (const Record& r : synth.rows()) mean += AsNumeric(r[c]);
      mean /= n;
      double var = 0.0;
      for (const Record& r : synth.rows()) {
        const double d = AsNumeric(r[c]) - mean;
        var += d * d;
      }
      features.push_back(mean);
      features.push_back(std::sqrt(var / n));
    } else {
      std::vector<double> freq(schema.column(c).categorical().levels.size(),
                               0.0);
      for (const Record& r : synth.rows()) freq[AsCategory(r[c])] += 1.0;
      for (double f : freq) features.push_back(f / n);
    }
  }
  features.push_back(
      static_cast<double>(CountWithinRadius(target, synth, radius, cfg)));
  return features;
}

std::vector<double> LeaveOneOutCentroidScores(
    const std::vector<std::vector<double>>& features,
    const std::vector<bool>& member) {
  const std::size_t n = features.size();
  if (n == 0 || member.size() != n) {
    Fail(ErrorCode::kInvalidArgument, "feature/label size mismatch");
  }
  const std::size_t dim = features.front().size();

  // Standardize each feature across all worlds (labels are not used here).
  std::vector<std::vector<double>> z(n);
  for (std::size_t f = 0; f < dim; ++f) {
    double mean = 0.0;
    for (const auto& x : features) mean += x[f];
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const auto& x : features) var += (x[f] - mean) * (x[f] - mean);
    const double sd = std::sqrt(var / static_cast<double>(n));
    if (!(sd > 0.0)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      z[i].push_back((features[i][f] - mean) / sd);
    }
  }
  const std::size_t kept = z.front().size();

  std::vector<double> sum_in(kept, 0.0), sum_out(kept, 0.0);
  std::size_t n_in = 0, n_out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& sum = member[i] ? sum_in : sum_out;
    for (std::size_t f = 0; f < kept; ++f) sum[f] += z[i][f];
    ++(member[i] ? n_in : n_out);
  }

  std::vector<double> scores(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t cnt_in = n_in - (member[i] ? 1 : 0);
    std::size_t cnt_out = n_out - (member[i] ? 0 : 1);
    if (cnt_in == 0 || cnt_out == 0 || kept == 0) continue;
    std::vector<double> c_in(kept), c_out(kept);
    for (std::size_t f = 0; f < kept; ++f) {
      const double own = z[i][f];
      c_in[f] = (sum_in[f] - (member[i] ? own : 0.0)) / cnt_in;
      c_out[f] = (sum_out[f] - (member[i] ? 0.0 : own)) / cnt_out;
    }
    scores[i] = Euclidean(z[i], c_out) - Euclidean(z[i], c_in);
  }
  return scores;
}

double RocAuc(const std::vector<double>& scores,
              const std::vector<bool>& member) {
  double wins = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!member[i]) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (member[j]) continue;
      ++pairs;
      if (scores[i] > scores[j]) {
        wins += 1.0;
      } else if (scores[i] == scores[j]) {
        wins += 0.5;
      }
    }
  }
  if (pairs == 0) return 0.5;
  return wins / static_cast<double>(pairs);
}

MiaResult MiaShadow(const Trainer& trainer, const Dataset& reference,
                    const TargetRecord& target, std::size_t n_shadow,
                    const SeededRng& rng, const MiaOptions& options) {
  if (n_shadow < 20 || n_shadow % 2 != 0) {
    Fail(ErrorCode::kInvalidArgument,
         "n_shadow must be even and >= 20, got " + std::to_string(n_shadow));
  }
  reference.schema().ValidateRecord(target.record);

  std::vector<std::size_t> pool_idx;
  for (std::size_t i = 0; i < reference.n(); ++i) {
    if (!RecordsEqual(reference.row(i), target.record)) pool_idx.push_back(i);
  }
  const Dataset pool = reference.Subset(pool_idx);
  const std::size_t m =
      options.shadow_train_size ? options.shadow_train_size : pool.n() / 2;
  if (m == 0 || pool.n() < 2 * m) {
    Fail(ErrorCode::kReferenceTooSmall,
         "reference pool of " + std::to_string(pool.n()) +
             " rows cannot supply shadow sets of " + std::to_string(m));
  }
  const Dataset with_target = reference.WithRow(target.record);
  const DistanceConfig cfg = options.distance
                                 ? *options.distance
                                 : DistanceConfig::FitRanges({&with_target});
  cfg.CheckCompatible(reference.schema());

  std::vector<std::vector<double>> features(n_shadow);
  std::vector<bool> member(n_shadow);
  for (std::size_t j = 0; j < n_shadow; ++j) member[j] = (j % 2 == 0);
  ParallelFor(n_shadow, [&](std::size_t j) {
    SeededRng world = rng.Substream("shadow", j);
    const bool in = (j % 2 == 0);
    const auto idx = SampleWithoutReplacement(pool.n(), in ? m - 1 : m, world);
    Dataset training = pool.Subset(idx);
    if (in) training = training.WithRow(target.record);
    SeededRng trainer_rng = world.Substream("trainer");
    const Dataset synth = trainer(training, trainer_rng);
    features[j] = ExtractFeatures(synth, target.record, cfg, options.radius);
  });

  const auto scores = LeaveOneOutCentroidScores(features, member);
  MiaResult result;
  result.auc = RocAuc(scores, member);
  std::size_t correct = 0;
  for (std::size_t j = 0; j < n_shadow; ++j) {
    if ((scores[j] > 0.0) == member[j]) ++correct;
  }
  result.accuracy = static_cast<double>(correct) / static_cast<double>(n_shadow);
  result.n_shadow = n_shadow;
  result.shadow_train_size = m;
  result.feature_count = features.front().size();
  result.radius = options.radius;
  result.seed = rng.seed();
  result.stream = rng.stream();
  result.target_label = target.label;
  return result;
}

}  // namespace synthaudit
