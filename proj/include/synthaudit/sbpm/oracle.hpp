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

#ifndef SYNTHAUDIT_SBPM_ORACLE_HPP_
#define SYNTHAUDIT_SBPM_ORACLE_HPP_

#include <atomic>
#include <cstddef>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/distance.hpp"
#include "synthaudit/sbpm/metrics.hpp"

namespace synthaudit {

// Black-box metrics service in the style of vendor privacy dashboards: it
// holds the train and test data privately and answers each candidate
// synthetic dataset with its SbpmReport. Nothing else is exposed.
//
// Evaluate may be called concurrently; query_count() equals the number of
// completed Evaluate calls.
class MetricsOracle {
 public:
  MetricsOracle(Dataset train, Dataset test, DistanceConfig cfg);

  MetricsOracle(const MetricsOracle&) = delete;
  MetricsOracle& operator=(const MetricsOracle&) = delete;

  SbpmReport Evaluate(const Dataset& candidate_synth);

  std::size_t query_count() const { return query_count_.load(); }
  const TabularSchema& schema() const { return train_.schema(); }

 private:
  Dataset train_;
  Dataset test_;
  DistanceConfig cfg_;
  SbpmSide test_side_;
  std::atomic<std::size_t> query_count_{0};
};

}  // namespace synthaudit

#endif  // SYNTHAUDIT_SBPM_ORACLE_HPP_
