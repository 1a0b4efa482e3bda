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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/distance.hpp"
#include "synthaudit/data/rng.hpp"
#include "synthaudit/data/sampling.hpp"
#include "synthaudit/data/schema.hpp"
#include "test_util.hpp"

namespace synthaudit {
namespace {

using ::synthaudit::testing::MixedSchema;
using ::synthaudit::testing::Numeric;
using ::synthaudit::testing::NumericSchema;
using ::synthaudit::testing::RandomMixed;

// ---------------------------------------------------------------- schema

TEST(Schema, RejectsDuplicateAndEmptyNames) {
  EXPECT_ERROR_CODE(TabularSchema({{"a", NumericKind{0, 1}},
                                   {"a", NumericKind{0, 1}}}),
                    ErrorCode::kInvalidSchema);
  EXPECT_ERROR_CODE(TabularSchema({{"", NumericKind{0, 1}}}),
                    ErrorCode::kInvalidSchema);
}

TEST(Schema, RejectsBadLevelsAndBounds) {
  EXPECT_ERROR_CODE(TabularSchema({{"c", CategoricalKind{{}}}}),
                    ErrorCode::kInvalidSchema);
  EXPECT_ERROR_CODE(TabularSchema({{"c", CategoricalKind{{"x", "x"}}}}),
                    ErrorCode::kInvalidSchema);
  EXPECT_ERROR_CODE(TabularSchema({{"n", NumericKind{2, 1}}}),
                    ErrorCode::kInvalidSchema);
  EXPECT_ERROR_CODE(TabularSchema({{"n", NumericKind{0, INFINITY}}}),
                    ErrorCode::kInvalidSchema);
}

TEST(Schema, ConstantColumnAllowed) {
  const TabularSchema s({{"n", NumericKind{3, 3}}});
  EXPECT_EQ(s.size(), 1u);
}

TEST(Schema, JsonRoundTrip) {
  const TabularSchema s = *MixedSchema();
  const auto j = s.ToJson();
  EXPECT_EQ(j["columns"][0]["kind"], "numeric");
  EXPECT_EQ(j["columns"][1]["kind"], "categorical");
  EXPECT_EQ(TabularSchema::FromJson(j), s);
}

TEST(Schema, FromJsonRejectsUnknownKind) {
  const auto j = nlohmann::json::parse(
      R"({"columns":[{"name":"a","kind":"text"}]})");
  EXPECT_ERROR_CODE(TabularSchema::FromJson(j), ErrorCode::kInvalidSchema);
  EXPECT_ERROR_CODE(TabularSchema::FromJson(nlohmann::json::array()),
                    ErrorCode::kInvalidSchema);
}

TEST(Schema, ValidateRecord) {
  const auto schema = MixedSchema();
  const TabularSchema& s = *schema;
  EXPECT_NO_THROW(s.ValidateRecord({1.0, CategoryIndex{2}, 0.0,
                                    CategoryIndex{1}}));
  // Wrong length, wrong kind, level out of range, non-finite.
  EXPECT_ERROR_CODE(s.ValidateRecord({1.0}), ErrorCode::kInvalidRecord);
  EXPECT_ERROR_CODE(
      s.ValidateRecord({CategoryIndex{0}, CategoryIndex{0}, 0.0,
                        CategoryIndex{0}}),
      ErrorCode::kInvalidRecord);
  EXPECT_ERROR_CODE(
      s.ValidateRecord({1.0, CategoryIndex{3}, 0.0, CategoryIndex{0}}),
      ErrorCode::kInvalidRecord);
  EXPECT_ERROR_CODE(
      s.ValidateRecord({NAN, CategoryIndex{0}, 0.0, CategoryIndex{0}}),
      ErrorCode::kInvalidRecord);
}

TEST(Schema, Lookups) {
  const auto schema = MixedSchema();
  const TabularSchema& s = *schema;
  EXPECT_EQ(s.ColumnIndex("income"), 2u);
  EXPECT_FALSE(s.FindColumn("nope"));
  EXPECT_ERROR_CODE(s.ColumnIndex("nope"), ErrorCode::kUnknownColumn);
  EXPECT_EQ(s.FindLevel(1, "blue"), 2u);
  EXPECT_FALSE(s.FindLevel(1, "blu"));
  EXPECT_EQ(s.DescribeRecord({1.5, CategoryIndex{0}, -2.0, CategoryIndex{1}}),
            "(1.5, red, -2, yes)");
}

TEST(Schema, RecordHashFoldsSignedZero) {
  const Record a = {0.0};
  const Record b = {-0.0};
  EXPECT_TRUE(RecordsEqual(a, b));
  EXPECT_EQ(RecordHash{}(a), RecordHash{}(b));
}

// ---------------------------------------------------------------- dataset

TEST(Dataset, ValidatesRows) {
  EXPECT_ERROR_CODE(Numeric(NumericSchema(2), {{0.0}}),
                    ErrorCode::kInvalidRecord);
}

TEST(Dataset, Derivations) {
  const Dataset d = Numeric(NumericSchema(1), {{0.1}, {0.2}, {0.3}});
  EXPECT_EQ(d.WithRow({0.4}).n(), 4u);
  EXPECT_EQ(d.WithoutRow(1).rows(), (std::vector<Record>{{0.1}, {0.3}}));
  const std::vector<std::size_t> idx = {2, 0};
  EXPECT_EQ(d.Subset(idx).rows(), (std::vector<Record>{{0.3}, {0.1}}));
  EXPECT_EQ(d.Concat(d).n(), 6u);
  EXPECT_TRUE(d.Contains({0.2}));
  EXPECT_FALSE(d.Contains({0.25}));
  EXPECT_ERROR_CODE(d.WithoutRow(3), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(d.Concat(Numeric(NumericSchema(2), {})),
                    ErrorCode::kSchemaMismatch);
}

// ---------------------------------------------------------------- rng

TEST(SeededRng, SameSeedAndStreamGiveSameSequence) {
  SeededRng a(7, "s"), b(7, "s");
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(SeededRng, EngineIsStandardMersenneTwister) {
  // Independent derivation of the engine seed: SplitMix64 applied to the
  // seed xor SplitMix64(FNV-1a of the stream name).
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t fnv = 0xcbf29ce484222325ULL;
  for (unsigned char c : std::string("root/child#3")) {
    fnv ^= c;
    fnv *= 0x100000001b3ULL;
  }
  std::mt19937_64 reference(splitmix(123 ^ splitmix(fnv)));
  SeededRng rng = SeededRng(123).Substream("child", 3);
  EXPECT_EQ(rng.stream(), "root/child#3");
  for (int i = 0; i < 10; ++i) EXPECT_EQ(rng.NextU64(), reference());
}

TEST(SeededRng, SubstreamsDifferAndDoNotAdvanceParent) {
  SeededRng parent(1);
  SeededRng copy = parent;
  SeededRng c0 = parent.Substream("x", 0);
  SeededRng c1 = parent.Substream("x", 1);
  EXPECT_NE(c0.NextU64(), c1.NextU64());
  EXPECT_EQ(parent.NextU64(), copy.NextU64());
}

TEST(SeededRng, UniformRanges) {
  SeededRng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.Uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const double v = rng.UniformOpen01();
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
    EXPECT_LT(rng.UniformInt(7), 7u);
  }
  EXPECT_ERROR_CODE(rng.UniformInt(0), ErrorCode::kInvalidArgument);
}

TEST(SeededRng, UniformIntIsUnbiased) {
  SeededRng rng(11);
  std::vector<int> counts(6, 0);
  const int n = 60000;
  for (int i = 0; i < n; ++i) ++counts[rng.UniformInt(6)];
  // Each cell is Binomial(60000, 1/6): sd about 91; allow 5 sd.
  for (int c : counts) EXPECT_NEAR(c, n / 6, 460);
}

TEST(SeededRng, StandardNormalMoments) {
  SeededRng rng(3);
  const int n = 200000;
  double sum = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.StandardNormal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.015);
}

// ---------------------------------------------------------------- distance

TEST(Distance, Examples) {
  const auto two = NumericSchema(2);
  const DistanceConfig cfg = DistanceConfig::FromSchema(*two);
  EXPECT_DOUBLE_EQ(Distance({0.3, 0.7}, {0.3, 0.7}, cfg), 0.0);
  EXPECT_DOUBLE_EQ(Distance({0.0, 0.0}, {1.0, 1.0}, cfg), 1.0);

  const TabularSchema mixed({{"n", NumericKind{0, 10}},
                             {"c", CategoricalKind{{"x", "y"}}}});
  const DistanceConfig mcfg = DistanceConfig::FromSchema(mixed);
  EXPECT_DOUBLE_EQ(Distance({5.0, CategoryIndex{0}}, {7.0, CategoryIndex{1}},
                            mcfg),
                   0.6);
}

TEST(Distance, ClipsAndHandlesConstantColumns) {
  const TabularSchema s({{"n", NumericKind{0, 1}}, {"k", NumericKind{2, 2}}});
  const DistanceConfig cfg = DistanceConfig::FromSchema(s);
  // |5 - 0| / 1 clips to 1; the constant column contributes 0.
  EXPECT_DOUBLE_EQ(Distance({5.0, 2.0}, {0.0, 9.0}, cfg), 0.5);
}

TEST(Distance, FitRangesUsesObservedSpan) {
  const auto s = NumericSchema(1, -100, 100);
  const Dataset a = Numeric(s, {{1.0}, {3.0}});
  const Dataset b = Numeric(s, {{5.0}});
  const DistanceConfig cfg = DistanceConfig::FitRanges({&a, &b});
  EXPECT_EQ(cfg.range(0), (NumericRange{1.0, 5.0}));
  EXPECT_DOUBLE_EQ(Distance({1.0}, {2.0}, cfg), 0.25);
}

TEST(Distance, SchemaMismatch) {
  const DistanceConfig cfg = DistanceConfig::FromSchema(*NumericSchema(2));
  EXPECT_ERROR_CODE(Distance({0.0}, {0.0}, cfg), ErrorCode::kSchemaMismatch);
  EXPECT_ERROR_CODE(Distance({0.0, CategoryIndex{0}}, {0.0, 0.0}, cfg),
                    ErrorCode::kSchemaMismatch);
  EXPECT_ERROR_CODE(cfg.CheckCompatible(*MixedSchema()),
                    ErrorCode::kSchemaMismatch);
}

TEST(Distance, WithoutColumnAveragesOverRemaining) {
  const DistanceConfig cfg =
      DistanceConfig::FromSchema(*NumericSchema(2)).WithoutColumn(1);
  EXPECT_EQ(cfg.active_count(), 1u);
  EXPECT_DOUBLE_EQ(Distance({0.2, 0.0}, {0.6, 1.0}, cfg), 0.4);
  EXPECT_DOUBLE_EQ(Distance({0.2, 0.0}, {0.2, 1.0},
                            cfg.WithoutColumn(0)),
                   0.0);
}

TEST(DistanceProperty, MetricAxiomsOnRandomTriples) {
  SeededRng rng(2024, "axioms");
  const Dataset pts = RandomMixed(30000, rng, /*coarse=*/false);
  const DistanceConfig cfg = DistanceConfig::FromSchema(pts.schema());
  for (std::size_t t = 0; t < 10000; ++t) {
    const Record& a = pts.row(3 * t);
    const Record& b = pts.row(3 * t + 1);
    const Record& c = pts.row(3 * t + 2);
    const double ab = Distance(a, b, cfg);
    const double ba = Distance(b, a, cfg);
    const double bc = Distance(b, c, cfg);
    const double ac = Distance(a, c, cfg);
    ASSERT_GE(ab, 0.0);
    ASSERT_LE(ab, 1.0);
    ASSERT_EQ(ab, ba);
    ASSERT_EQ(Distance(a, a, cfg), 0.0);
    ASSERT_LE(ac, ab + bc + 1e-12);
  }
}

// ---------------------------------------------------------------- sampling

TEST(SplitTrainTest, EvenSplitIsPartition) {
  SeededRng data_rng(1);
  const Dataset d = Gaussian2dSample(20, data_rng);
  SeededRng rng(7);
  const auto [train, test] = SplitTrainTest(d, rng);
  EXPECT_EQ(train.n(), 10u);
  EXPECT_EQ(test.n(), 10u);
  auto key = [](const Record& r) {
    return std::make_pair(AsNumeric(r[0]), AsNumeric(r[1]));
  };
  std::multiset<std::pair<double, double>> all, parts;
  for (const Record& r : d.rows()) all.insert(key(r));
  for (const Record& r : train.rows()) parts.insert(key(r));
  for (const Record& r : test.rows()) parts.insert(key(r));
  EXPECT_EQ(all, parts);
}

TEST(SplitTrainTest, OddGivesTrainTheExtraRow) {
  SeededRng data_rng(1);
  const Dataset d = Gaussian2dSample(21, data_rng);
  SeededRng rng(7);
  const auto [train, test] = SplitTrainTest(d, rng);
  EXPECT_EQ(train.n(), 11u);
  EXPECT_EQ(test.n(), 10u);
}

TEST(SplitTrainTest, DeterministicAndRejectsTinyInput) {
  SeededRng data_rng(1);
  const Dataset d = Gaussian2dSample(9, data_rng);
  SeededRng a(4), b(4);
  EXPECT_EQ(SplitTrainTest(d, a).first.rows(), SplitTrainTest(d, b).first.rows());
  SeededRng c(4);
  EXPECT_ERROR_CODE(SplitTrainTest(d.Subset(std::vector<std::size_t>{0}), c),
                    ErrorCode::kTooFewRows);
}

TEST(Gaussian2d, SmallSampleMeanWithinBound) {
  SeededRng rng(42, "gaussian");
  const Dataset d = Gaussian2dSample(10, rng);
  ASSERT_EQ(d.n(), 10u);
  for (std::size_t c = 0; c < 2; ++c) {
    double m = 0;
    for (const Record& r : d.rows()) m += AsNumeric(r[c]);
    EXPECT_LE(std::abs(m / 10), 1.2);
  }
}

TEST(Gaussian2d, LargeSampleVariance) {
  SeededRng rng(9);
  const Dataset d = Gaussian2dSample(100000, rng);
  for (std::size_t c = 0; c < 2; ++c) {
    double m = 0, sq = 0;
    for (const Record& r : d.rows()) m += AsNumeric(r[c]);
    m /= d.n();
    for (const Record& r : d.rows()) sq += std::pow(AsNumeric(r[c]) - m, 2);
    const double var = sq / d.n();
    EXPECT_GE(var, 0.98);
    EXPECT_LE(var, 1.02);
  }
}

TEST(Gaussian2d, DeterministicAndRejectsZero) {
  SeededRng a(5), b(5);
  EXPECT_EQ(Gaussian2dSample(50, a).rows(), Gaussian2dSample(50, b).rows());
  EXPECT_ERROR_CODE(Gaussian2dSample(0, a), ErrorCode::kInvalidArgument);
}

TEST(SampleWithoutReplacement, DistinctAndUniform) {
  SeededRng rng(8);
  std::vector<int> hits(10, 0);
  for (int t = 0; t < 20000; ++t) {
    const auto idx = SampleWithoutReplacement(10, 3, rng);
    ASSERT_EQ(std::set<std::size_t>(idx.begin(), idx.end()).size(), 3u);
    for (std::size_t i : idx) ++hits[i];
  }
  // Each index is included with probability 3/10: expected 6000, sd ~65.
  for (int h : hits) EXPECT_NEAR(h, 6000, 330);
  EXPECT_ERROR_CODE(SampleWithoutReplacement(3, 4, rng),
                    ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace synthaudit
