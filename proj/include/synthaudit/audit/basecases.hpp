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

#ifndef SYNTHAUDIT_AUDIT_BASECASES_HPP_
#define SYNTHAUDIT_AUDIT_BASECASES_HPP_

// Three deliberately extreme scenarios that act as unit tests for privacy
// mechanisms: a two-record worst case for DP, a release that republishes the
// holdout set, and a release that republishes perturbed train outliers. The
// last two pass every similarity metric while leaking individuals.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "synthaudit/attacks/results.hpp"
#include "synthaudit/audit/report.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/sbpm/metrics.hpp"

namespace synthaudit {

// Seed used by the CLI and the acceptance suite for the 2D normal fixtures.
inline constexpr std::uint64_t kBasecaseSeed = 42;

struct GaussianFixture {
  Dataset train;
  Dataset test;
};

// Ten train and ten test rows from a 2D standard normal.
GaussianFixture MakeGaussianFixture(std::uint64_t seed);

struct TwoRecordOptions {
  double epsilon = 0.5;
  std::size_t trials = 1000;
  double ci_level = 0.95;
  std::size_t bins = 10;
  std::size_t synth_rows = 100;
  double radius = 0.05;
  // The target sits near the corner of the schema range.
  Record target = {4.0, 4.0};
  Record other = {0.0, 0.0};
};

struct TwoRecordOutcome {
  // The neighboring dataset that includes the target.
  Dataset train;
  DifferencingResult probe;
  double epsilon = 0.0;
  // The probe's lower bound does not exceed the configured epsilon.
  bool expectation_met = false;
};

// Differencing probe of the DP marginal pipeline between {other} and
// {other, target}.
TwoRecordOutcome RunTwoRecordCase(std::uint64_t seed,
                                  const TwoRecordOptions& options = {});

struct CopyTestOutcome {
  GaussianFixture data;
  Dataset synth;
  SbpmReport sbpm;
  // Synthetic rows identical to some test row.
  std::size_t exact_test_matches = 0;
  RiskReport report;
  // Metrics pass, every synthetic row is a test row, overall risk flagged.
  bool expectation_met = false;
};

// The release is an exact replica of the test set.
CopyTestOutcome RunCopyTestCase(std::uint64_t seed);

struct OutlierLeakOutcome {
  GaussianFixture data;
  Dataset synth;
  SbpmReport sbpm;
  // Train indices of the leaked outliers, farthest first.
  std::vector<std::size_t> outliers;
  // Normalized distance from each outlier to its closest synthetic row.
  std::vector<double> nearest_synth_distance;
  RiskReport report;
  // Metrics pass, each outlier has a synthetic row within kOutlierLeakRadius,
  // and at least one risk is flagged.
  bool expectation_met = false;
};

inline constexpr double kOutlierLeakRadius = 0.1;

// The release holds the three train outliers perturbed with sigma 0.05 plus
// 70 copies of the origin.
OutlierLeakOutcome RunOutlierLeakCase(std::uint64_t seed);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_AUDIT_BASECASES_HPP_
