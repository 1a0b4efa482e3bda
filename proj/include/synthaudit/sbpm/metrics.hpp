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

#ifndef SYNTHAUDIT_SBPM_METRICS_HPP_
#define SYNTHAUDIT_SBPM_METRICS_HPP_

#include <span>
#include <vector>

#include "json.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/distance.hpp"

namespace synthaudit {

enum class MetricStatistic {
  kAverage,
  // Linear interpolation between order statistics at zero-based rank
  // 0.05 * (n - 1).
  kPercentile5,
};

// Throws kEmptyInput on an empty list.
double ComputeStatistic(std::span<const double> values, MetricStatistic stat);

// 1.0 for each row of `other` that exactly equals some train row, else 0.0.
std::vector<double> IdenticalMatchIndicators(const Dataset& train,
                                             const Dataset& other);
// Fraction of `other` rows that are exact copies of a train row.
double IdenticalMatchShare(const Dataset& train, const Dataset& other);

// Distance from each `other` row to its closest train row, in `other` order.
std::vector<double> DcrValues(const Dataset& train, const Dataset& other,
                              const DistanceConfig& cfg);

// Per `other` row, d1 / d2 for its two closest train rows. When d2 == 0 the
// ratio is 1.0: two zero-distance matches are maximally ambiguous.
std::vector<double> NndrValues(const Dataset& train, const Dataset& other,
                               const DistanceConfig& cfg);

// Statistics of one compared dataset against train.
struct SbpmSide {
  double ims = 0.0;
  double dcr_p5 = 0.0;
  double nndr_p5 = 0.0;
};

SbpmSide ComputeSbpmSide(const Dataset& train, const Dataset& other,
                         const DistanceConfig& cfg);

struct SbpmReport {
  double ims_synth = 0.0;
  double ims_test = 0.0;
  double dcr_p5_synth = 0.0;
  double dcr_p5_test = 0.0;
  double nndr_p5_synth = 0.0;
  double nndr_p5_test = 0.0;
  bool ims_pass = false;
  bool dcr_pass = false;
  bool nndr_pass = false;
  bool all_pass = false;

  nlohmann::json ToJson() const;
  static SbpmReport FromJson(const nlohmann::json& j);

  friend bool operator==(const SbpmReport&, const SbpmReport&) = default;
};

// Applies the non-strict pass tests:
//   IMS:  ims_test  >= ims_synth
//   DCR:  dcr_test  <= dcr_synth
//   NNDR: nndr_test <= nndr_synth
SbpmReport AssembleSbpmReport(const SbpmSide& synth, const SbpmSide& test);

// Requires a shared schema, non-empty inputs and train.n >= 2.
SbpmReport EvaluateSbpm(const Dataset& train, const Dataset& test,
                        const Dataset& synth, const DistanceConfig& cfg);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_SBPM_METRICS_HPP_
