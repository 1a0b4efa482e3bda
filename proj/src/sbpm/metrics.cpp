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

#include "synthaudit/sbpm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "synthaudit/common/error.hpp"
#include "synthaudit/data/neighbors.hpp"

namespace synthaudit {
namespace {

void CheckPair(const Dataset& train, const Dataset& other,
               const DistanceConfig& cfg) {
  RequireSameSchema(train, other, "similarity metric");
  RequireNonEmpty(train, "train");
  RequireNonEmpty(other, "compared dataset");
  cfg.CheckCompatible(train.schema());
}

double NndrRatio(const std::vector<Neighbor>& nn) {
  const double d1 = nn[0].distance;
  const double d2 = nn[1].distance;
  if (d2 == 0.0) return 1.0;
  return d1 / d2;
}

}  // namespace

double ComputeStatistic(std::span<const double> values, MetricStatistic stat) {
  if (values.empty()) Fail(ErrorCode::kEmptyInput, "statistic of empty list");
  if (stat == MetricStatistic::kAverage) {
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double rank = 0.05 * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const double frac = rank - static_cast<double>(lo);
  if (lo + 1 >= sorted.size() || frac == 0.0) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<double> IdenticalMatchIndicators(const Dataset& train,
                                             const Dataset& other) {
  RequireSameSchema(train, other, "identical match share");
  std::unordered_set<Record, RecordHash, RecordEq> seen(train.rows().begin(),
                                                        train.rows().end());
  std::vector<double> out;
  out.reserve(other.n());
  for (const Record& r : other.rows()) {
    out.push_back(seen.contains(r) ? 1.0 : 0.0);
  }
  return out;
}

double IdenticalMatchShare(const Dataset& train, const Dataset& other) {
  RequireNonEmpty(other, "identical match share");
  const auto ind = IdenticalMatchIndicators(train, other);
  return ComputeStatistic(ind, MetricStatistic::kAverage);
}

std::vector<double> DcrValues(const Dataset& train, const Dataset& other,
                              const DistanceConfig& cfg) {
  CheckPair(train, other, cfg);
  const auto nn = BatchNearestNeighbors(other, train, 1, cfg);
  std::vector<double> out;
  out.reserve(nn.size());
  for (const auto& row : nn) out.push_back(row[0].distance);
  return out;
}

std::vector<double> NndrValues(const Dataset& train, const Dataset& other,
                               const DistanceConfig& cfg) {
  if (train.n() < 2) {
    Fail(ErrorCode::kTrainTooSmall, "NNDR needs at least 2 train rows");
  }
  CheckPair(train, other, cfg);
  const auto nn = BatchNearestNeighbors(other, train, 2, cfg);
  std::vector<double> out;
  out.reserve(nn.size());
  for (const auto& row : nn) out.push_back(NndrRatio(row));
  return out;
}

SbpmSide ComputeSbpmSide(const Dataset& train, const Dataset& other,
                         const DistanceConfig& cfg) {
  if (train.n() < 2) {
    Fail(ErrorCode::kTrainTooSmall, "NNDR needs at least 2 train rows");
  }
  CheckPair(train, other, cfg);
  // One 2-NN pass serves both DCR (first neighbor) and NNDR.
  const auto nn = BatchNearestNeighbors(other, train, 2, cfg);
  std::vector<double> dcr, nndr;
  dcr.reserve(nn.size());
  nndr.reserve(nn.size());
  for (const auto& row : nn) {
    dcr.push_back(row[0].distance);
    nndr.push_back(NndrRatio(row));
  }
  SbpmSide side;
  side.ims = ComputeStatistic(IdenticalMatchIndicators(train, other),
                              MetricStatistic::kAverage);
  side.dcr_p5 = ComputeStatistic(dcr, MetricStatistic::kPercentile5);
  side.nndr_p5 = ComputeStatistic(nndr, MetricStatistic::kPercentile5);
  return side;
}

SbpmReport AssembleSbpmReport(const SbpmSide& synth, const SbpmSide& test) {
  SbpmReport r;
  r.ims_synth = synth.ims;
  r.ims_test = test.ims;
  r.dcr_p5_synth = synth.dcr_p5;
  r.dcr_p5_test = test.dcr_p5;
  r.nndr_p5_synth = synth.nndr_p5;
  r.nndr_p5_test = test.nndr_p5;
  r.ims_pass = r.ims_test >= r.ims_synth;
  r.dcr_pass = r.dcr_p5_test <= r.dcr_p5_synth;
  r.nndr_pass = r.nndr_p5_test <= r.nndr_p5_synth;
  r.all_pass = r.ims_pass && r.dcr_pass && r.nndr_pass;
  return r;
}

SbpmReport EvaluateSbpm(const Dataset& train, const Dataset& test,
                        const Dataset& synth, const DistanceConfig& cfg) {
  RequireSameSchema(train, test, "evaluate_sbpm");
  RequireSameSchema(train, synth, "evaluate_sbpm");
  return AssembleSbpmReport(ComputeSbpmSide(train, synth, cfg),
                            ComputeSbpmSide(train, test, cfg));
}

nlohmann::json SbpmReport::ToJson() const {
  return {{"ims_synth", ims_synth},         {"ims_test", ims_test},
          {"dcr_p5_synth", dcr_p5_synth},   {"dcr_p5_test", dcr_p5_test},
          {"nndr_p5_synth", nndr_p5_synth}, {"nndr_p5_test", nndr_p5_test},
          {"ims_pass", ims_pass},           {"dcr_pass", dcr_pass},
          {"nndr_pass", nndr_pass},         {"all_pass", all_pass}};
}

SbpmReport SbpmReport::FromJson(const nlohmann::json& j) {
  SbpmReport r;
  r.ims_synth = j.at("ims_synth").get<double>();
  r.ims_test = j.at("ims_test").get<double>();
  r.dcr_p5_synth = j.at("dcr_p5_synth").get<double>();
  r.dcr_p5_test = j.at("dcr_p5_test").get<double>();
  r.nndr_p5_synth = j.at("nndr_p5_synth").get<double>();
  r.nndr_p5_test = j.at("nndr_p5_test").get<double>();
  r.ims_pass = j.at("ims_pass").get<bool>();
  r.dcr_pass = j.at("dcr_pass").get<bool>();
  r.nndr_pass = j.at("nndr_pass").get<bool>();
  r.all_pass = j.at("all_pass").get<bool>();
  return r;
}

}  // namespace synthaudit
