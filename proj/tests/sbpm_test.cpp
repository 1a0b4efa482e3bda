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

#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "synthaudit/data/neighbors.hpp"
#include "synthaudit/data/sampling.hpp"
#include "synthaudit/sbpm/metrics.hpp"
#include "synthaudit/sbpm/oracle.hpp"
#include "test_util.hpp"

namespace synthaudit {
namespace {

using ::synthaudit::testing::Numeric;
using ::synthaudit::testing::NumericSchema;
using ::synthaudit::testing::RandomMixed;

TEST(ComputeStatistic, Examples) {
  const std::vector<double> three = {1, 2, 3};
  EXPECT_DOUBLE_EQ(ComputeStatistic(three, MetricStatistic::kAverage), 2.0);
  std::vector<double> hundred(101);
  std::iota(hundred.begin(), hundred.end(), 0.0);
  EXPECT_DOUBLE_EQ(ComputeStatistic(hundred, MetricStatistic::kPercentile5),
                   5.0);
  const std::vector<double> one = {0.37};
  EXPECT_DOUBLE_EQ(ComputeStatistic(one, MetricStatistic::kPercentile5), 0.37);
  EXPECT_ERROR_CODE(ComputeStatistic({}, MetricStatistic::kAverage),
                    ErrorCode::kEmptyInput);
}

TEST(ComputeStatistic, InterpolatesAndIgnoresOrder) {
  // Ten values: rank 0.45 lies between the two smallest.
  const std::vector<double> v = {9, 1, 5, 3, 7, 2, 8, 4, 6, 10};
  EXPECT_DOUBLE_EQ(ComputeStatistic(v, MetricStatistic::kPercentile5), 1.45);
}

TEST(IdenticalMatchShare, Examples) {
  const auto s = NumericSchema(2);
  EXPECT_DOUBLE_EQ(
      IdenticalMatchShare(Numeric(s, {{0, 0}}), Numeric(s, {{0, 0}})), 1.0);
  SeededRng a(1), b(2);
  EXPECT_DOUBLE_EQ(IdenticalMatchShare(Gaussian2dSample(50, a),
                                       Gaussian2dSample(50, b)),
                   0.0);
  const TabularSchema mixed({{"n", NumericKind{0, 10}},
                             {"c", CategoricalKind{{"a", "b"}}}});
  const Dataset train(mixed, {{1.0, CategoryIndex{0}}});
  const Dataset other(mixed, {{1.0, CategoryIndex{0}}, {2.0, CategoryIndex{1}}});
  EXPECT_DOUBLE_EQ(IdenticalMatchShare(train, other), 0.5);
  EXPECT_ERROR_CODE(IdenticalMatchShare(train, Dataset(mixed)),
                    ErrorCode::kEmptyDataset);
  EXPECT_ERROR_CODE(IdenticalMatchShare(train, Numeric(s, {{0, 0}})),
                    ErrorCode::kSchemaMismatch);
}

TEST(DcrValues, Examples) {
  const auto s = NumericSchema(2);
  const DistanceConfig cfg = DistanceConfig::FromSchema(*s);
  const Dataset train = Numeric(s, {{0, 0}, {1, 1}});
  const auto v = DcrValues(train, Numeric(s, {{0.1, 0.1}}), cfg);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NEAR(v[0], 0.1, 1e-15);
  for (double d : DcrValues(train, train, cfg)) EXPECT_EQ(d, 0.0);
  EXPECT_EQ(DcrValues(train, Numeric(s, {{0, 1}, {1, 0}, {0.5, 0.5}}), cfg)
                .size(),
            3u);
}

TEST(NndrValues, Examples) {
  const auto s = NumericSchema(1);
  const DistanceConfig cfg = DistanceConfig::FromSchema(*s);
  // Equidistant from both train rows.
  EXPECT_DOUBLE_EQ(
      NndrValues(Numeric(s, {{0.2}, {0.6}}), Numeric(s, {{0.4}}), cfg)[0],
      1.0);
  // d1 = 0.1, d2 = 0.4.
  EXPECT_NEAR(
      NndrValues(Numeric(s, {{0.5}, {0.8}}), Numeric(s, {{0.4}}), cfg)[0],
      0.25, 1e-12);
  // Duplicated train row matched exactly: both distances are zero.
  EXPECT_DOUBLE_EQ(
      NndrValues(Numeric(s, {{0.3}, {0.3}}), Numeric(s, {{0.3}}), cfg)[0],
      1.0);
  EXPECT_ERROR_CODE(NndrValues(Numeric(s, {{0.3}}), Numeric(s, {{0.3}}), cfg),
                    ErrorCode::kTrainTooSmall);
}

TEST(SbpmProperty, DcrBoundedByNndrDenominatorAndRatiosInUnitInterval) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SeededRng rng(seed, "sbpm");
    const Dataset train = RandomMixed(60, rng, seed % 2 == 0);
    const Dataset other = RandomMixed(40, rng, seed % 2 == 0);
    const DistanceConfig cfg = DistanceConfig::FromSchema(train.schema());
    const auto dcr = DcrValues(train, other, cfg);
    const auto nndr = NndrValues(train, other, cfg);
    for (std::size_t i = 0; i < other.n(); ++i) {
      const auto nn = NearestNeighborsSerial(other.row(i), train, 2, cfg);
      EXPECT_EQ(dcr[i], nn[0].distance);
      EXPECT_LE(dcr[i], nn[1].distance);
      EXPECT_GE(nndr[i], 0.0);
      EXPECT_LE(nndr[i], 1.0);
    }
  }
}

TEST(EvaluateSbpm, ReplicaOfTestPassesEverything) {
  SeededRng rng(42, "sbpm");
  const Dataset train = Gaussian2dSample(10, rng);
  const Dataset test = Gaussian2dSample(10, rng);
  const DistanceConfig cfg = DistanceConfig::FitRanges({&train, &test});
  const SbpmReport r = EvaluateSbpm(train, test, test, cfg);
  EXPECT_TRUE(r.all_pass);
  EXPECT_EQ(r.ims_synth, 0.0);
  EXPECT_EQ(r.ims_synth, r.ims_test);
  EXPECT_EQ(r.dcr_p5_synth, r.dcr_p5_test);
  EXPECT_EQ(r.nndr_p5_synth, r.nndr_p5_test);
}

TEST(EvaluateSbpm, ReplicaOfTrainFailsIms) {
  SeededRng rng(3);
  const Dataset train = Gaussian2dSample(20, rng);
  const Dataset test = Gaussian2dSample(20, rng);
  const DistanceConfig cfg = DistanceConfig::FitRanges({&train, &test});
  const SbpmReport r = EvaluateSbpm(train, test, train, cfg);
  EXPECT_EQ(r.ims_synth, 1.0);
  EXPECT_EQ(r.ims_test, 0.0);
  EXPECT_FALSE(r.ims_pass);
  EXPECT_FALSE(r.all_pass);
}

TEST(EvaluateSbpm, SwappingTestAndSynthSwapsFields) {
  SeededRng rng(17);
  const Dataset train = RandomMixed(50, rng);
  const Dataset test = RandomMixed(50, rng);
  const Dataset synth = RandomMixed(70, rng);
  const DistanceConfig cfg = DistanceConfig::FitRanges({&train, &test});
  const SbpmReport a = EvaluateSbpm(train, test, synth, cfg);
  const SbpmReport b = EvaluateSbpm(train, synth, test, cfg);
  EXPECT_EQ(a.ims_synth, b.ims_test);
  EXPECT_EQ(a.ims_test, b.ims_synth);
  EXPECT_EQ(a.dcr_p5_synth, b.dcr_p5_test);
  EXPECT_EQ(a.dcr_p5_test, b.dcr_p5_synth);
  EXPECT_EQ(a.nndr_p5_synth, b.nndr_p5_test);
  EXPECT_EQ(a.nndr_p5_test, b.nndr_p5_synth);
  EXPECT_EQ(a, EvaluateSbpm(train, test, synth, cfg));
}

TEST(AssembleSbpmReport, PassFlagsFollowTests) {
  const SbpmReport eq = AssembleSbpmReport({0.1, 0.2, 0.3}, {0.1, 0.2, 0.3});
  EXPECT_TRUE(eq.all_pass);
  const SbpmReport r = AssembleSbpmReport({0.2, 0.1, 0.5}, {0.1, 0.2, 0.4});
  EXPECT_FALSE(r.ims_pass);
  EXPECT_FALSE(r.dcr_pass);
  EXPECT_TRUE(r.nndr_pass);
  EXPECT_FALSE(r.all_pass);
}

TEST(SbpmReport, JsonRoundTripHasAllFields) {
  const SbpmReport r = AssembleSbpmReport({0.25, 0.5, 0.75}, {0.5, 0.125, 1});
  const auto j = r.ToJson();
  for (const char* key :
       {"ims_synth", "ims_test", "dcr_p5_synth", "dcr_p5_test",
        "nndr_p5_synth", "nndr_p5_test", "ims_pass", "dcr_pass", "nndr_pass",
        "all_pass"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(SbpmReport::FromJson(j), r);
}

TEST(MetricsOracle, CountsQueriesAndRevealsMembership) {
  const auto s = NumericSchema(2);
  const Dataset train = Numeric(s, {{0.1, 0.2}, {0.3, 0.4}, {0.5, 0.6}});
  const Dataset test = Numeric(s, {{0.7, 0.8}, {0.9, 0.1}});
  MetricsOracle oracle(train, test, DistanceConfig::FromSchema(*s));
  const SbpmReport a = oracle.Evaluate(train);
  const SbpmReport b = oracle.Evaluate(train);
  EXPECT_EQ(a, b);
  EXPECT_EQ(oracle.query_count(), 2u);
  EXPECT_EQ(a.ims_synth, 1.0);
  EXPECT_EQ(oracle.Evaluate(Numeric(s, {{0.55, 0.55}, {0.55, 0.55}})).ims_synth,
            0.0);
  EXPECT_EQ(oracle.query_count(), 3u);
  EXPECT_ERROR_CODE(oracle.Evaluate(Numeric(NumericSchema(1), {{0.1}})),
                    ErrorCode::kSchemaMismatch);
}

TEST(MetricsOracle, ConcurrentQueriesAreAllCounted) {
  SeededRng rng(5);
  const Dataset train = RandomMixed(30, rng);
  const Dataset test = RandomMixed(30, rng);
  MetricsOracle oracle(train, test, DistanceConfig::FitRanges({&train, &test}));
  const Dataset q = RandomMixed(5, rng);
#pragma omp parallel for
  for (int i = 0; i < 64; ++i) oracle.Evaluate(q);
  EXPECT_EQ(oracle.query_count(), 64u);
}

}  // namespace
}  // namespace synthaudit
