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

#include "synthaudit/attacks/aia.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "synthaudit/common/error.hpp"
#include "synthaudit/common/parallel.hpp"
#include "synthaudit/data/neighbors.hpp"

namespace synthaudit {
namespace {

Value Aggregate(const Dataset& synth, std::size_t column,
                const std::vector<std::size_t>& rows) {
  const Column& col = synth.schema().column(column);
  if (col.is_numeric()) {
    double sum = 0.0;
    for (std::size_t r : rows) sum += AsNumeric(synth.row(r)[column]);
    return sum / static_cast<double>(rows.size());
  }
  std::vector<std::size_t> votes(col.categorical().levels.size(), 0);
  for (std::size_t r : rows) ++votes[AsCategory(synth.row(r)[column])];
  // max_element returns the first maximum, i.e. the lowest level index.
  return CategoryIndex{static_cast<std::uint32_t>(
      std::max_element(votes.begin(), votes.end()) - votes.begin())};
}

bool Correct(const Value& predicted, const Value& truth, std::size_t column,
             const DistanceConfig& cfg, double tolerance) {
  if (!IsNumeric(truth)) return AsCategory(predicted) == AsCategory(truth);
  return cfg.ColumnDistance(column, predicted, truth) <= tolerance;
}

}  // namespace

Value AiaKnn(const Dataset& synth, const Record& partial,
             std::string_view hidden_column, std::size_t k,
             const DistanceConfig& cfg) {
  const std::size_t hidden = synth.schema().ColumnIndex(hidden_column);
  if (synth.empty()) Fail(ErrorCode::kEmptySynth, "synthetic data is empty");
  if (k == 0) Fail(ErrorCode::kInvalidArgument, "k must be at least 1");
  const DistanceConfig known = cfg.WithoutColumn(hidden);
  const auto nn =
      NearestNeighborsSerial(partial, synth, std::min(k, synth.n()), known);
  std::vector<std::size_t> rows;
  rows.reserve(nn.size());
  for (const Neighbor& nb : nn) rows.push_back(nb.index);
  return Aggregate(synth, hidden, rows);
}

AiaResult AiaAdvantage(const Dataset& synth, const Dataset& victims,
                       std::string_view hidden_column, std::size_t k,
                       const DistanceConfig& cfg, double tolerance) {
  const std::size_t hidden = synth.schema().ColumnIndex(hidden_column);
  if (victims.empty()) Fail(ErrorCode::kNoVictims, "no victims supplied");
  if (synth.empty()) Fail(ErrorCode::kEmptySynth, "synthetic data is empty");
  RequireSameSchema(synth, victims, "attribute inference");

  std::vector<std::size_t> all(synth.n());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const Value marginal = Aggregate(synth, hidden, all);

  std::vector<char> hit(victims.n(), 0), baseline_hit(victims.n(), 0);
  ParallelFor(victims.n(), [&](std::size_t v) {
    const Record& victim = victims.row(v);
    const Value guess = AiaKnn(synth, victim, hidden_column, k, cfg);
    hit[v] = Correct(guess, victim[hidden], hidden, cfg, tolerance);
    baseline_hit[v] = Correct(marginal, victim[hidden], hidden, cfg, tolerance);
  });

  const double n = static_cast<double>(victims.n());
  AiaResult result;
  result.accuracy = std::count(hit.begin(), hit.end(), 1) / n;
  result.baseline = std::count(baseline_hit.begin(), baseline_hit.end(), 1) / n;
  result.advantage = result.accuracy - result.baseline;
  result.victims = victims.n();
  result.k = k;
  result.hidden_column = std::string(hidden_column);
  result.tolerance = tolerance;
  return result;
}

}  // namespace synthaudit
