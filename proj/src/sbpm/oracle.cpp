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

#include "synthaudit/sbpm/oracle.hpp"

namespace synthaudit {

MetricsOracle::MetricsOracle(Dataset train, Dataset test, DistanceConfig cfg)
    : train_(std::move(train)), test_(std::move(test)), cfg_(std::move(cfg)) {
  RequireSameSchema(train_, test_, "metrics oracle");
  // The test side never changes between queries.
  test_side_ = ComputeSbpmSide(train_, test_, cfg_);
}

SbpmReport MetricsOracle::Evaluate(const Dataset& candidate_synth) {
  RequireSameSchema(train_, candidate_synth, "oracle query");
  SbpmReport report = AssembleSbpmReport(
      ComputeSbpmSide(train_, candidate_synth, cfg_), test_side_);
  query_count_.fetch_add(1);
  return report;
}

}  // namespace synthaudit
