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

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>

#include <gtest/gtest.h>

#include "synthaudit/data/csv.hpp"
#include "synthaudit/data/sampling.hpp"
#include "test_util.hpp"

namespace synthaudit {
namespace {

using ::synthaudit::testing::NumericSchema;
using ::synthaudit::testing::RandomMixed;

const TabularSchema kXy({{"x", NumericKind{-5, 5}}, {"y", NumericKind{-5, 5}}});
const TabularSchema kColor({{"color", CategoricalKind{{"blue", "red"}}}});

TEST(Csv, ParsesSimpleFile) {
  const Dataset d = ParseCsv("x,y\n0.0,0.0\n", kXy);
  ASSERT_EQ(d.n(), 1u);
  EXPECT_EQ(d.row(0), (Record{0.0, 0.0}));
}

TEST(Csv, NanIsBadCell) {
  try {
    ParseCsv("x,y\n1,2\nNaN,0\n", kXy);
    FAIL() << "expected BadCellError";
  } catch (const BadCellError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadCell);
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.column(), "x");
  }
  EXPECT_ERROR_CODE(ParseCsv("x,y\ninf,0\n", kXy), ErrorCode::kBadCell);
  EXPECT_ERROR_CODE(ParseCsv("x,y\n1e999,0\n", kXy), ErrorCode::kBadCell);
}

TEST(Csv, UnknownLevelReason) {
  try {
    ParseCsv("color\nblu\n", kColor);
    FAIL() << "expected BadCellError";
  } catch (const BadCellError& e) {
    EXPECT_EQ(e.reason(), "unknown level");
    EXPECT_EQ(e.row(), 1u);
  }
}

TEST(Csv, FirstOffendingCellIsReported) {
  try {
    ParseCsv("x,y\n1,abc\nzz,0\n", kXy);
    FAIL();
  } catch (const BadCellError& e) {
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.column(), "y");
    EXPECT_EQ(e.reason(), "not a decimal number");
  }
}

TEST(Csv, FieldCountMismatch) {
  EXPECT_ERROR_CODE(ParseCsv("x,y\n1\n", kXy), ErrorCode::kBadCell);
  EXPECT_ERROR_CODE(ParseCsv("x,y\n1,2,3\n", kXy), ErrorCode::kBadCell);
}

TEST(Csv, HeaderMismatchCarriesBothHeaders) {
  try {
    ParseCsv("y,x\n1,2\n", kXy);
    FAIL();
  } catch (const HeaderMismatchError& e) {
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(e.found(), (std::vector<std::string>{"y", "x"}));
  }
  EXPECT_ERROR_CODE(ParseCsv("", kXy), ErrorCode::kHeaderMismatch);
}

TEST(Csv, CrlfAndBlankLines) {
  const Dataset d = ParseCsv("x,y\r\n1,2\r\n\r\n3,4\r\n", kXy);
  ASSERT_EQ(d.n(), 2u);
  EXPECT_EQ(d.row(1), (Record{3.0, 4.0}));
}

TEST(Csv, QuotedFields) {
  const TabularSchema s({{"name", CategoricalKind{{"a,b", "say \"hi\"", "x"}}},
                         {"v", NumericKind{0, 1}}});
  const Dataset d =
      ParseCsv("name,v\n\"a,b\",0.5\n\"say \"\"hi\"\"\",1\nx,0\n", s);
  ASSERT_EQ(d.n(), 3u);
  EXPECT_EQ(AsCategory(d.row(0)[0]), 0u);
  EXPECT_EQ(AsCategory(d.row(1)[0]), 1u);
  EXPECT_EQ(FormatCsv(d), "name,v\n\"a,b\",0.5\n\"say \"\"hi\"\"\",1\nx,0\n");
  EXPECT_ERROR_CODE(ParseCsv("name,v\n\"a,b,0.5\n", s), ErrorCode::kBadCell);
}

TEST(Csv, FormatNumberIsShortestRoundTrip) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(1.0), "1");
  EXPECT_EQ(FormatNumber(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(FormatNumber(0.1 + 0.2), "0.30000000000000004");
}

TEST(Csv, MissingFile) {
  EXPECT_ERROR_CODE(LoadCsv("/nonexistent/dir/data.csv", kXy),
                    ErrorCode::kMissingFile);
}

TEST(CsvProperty, SaveThenLoadIsExact) {
  const auto dir = std::filesystem::temp_directory_path() / "synthaudit_csv";
  std::filesystem::create_directories(dir);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeededRng rng(seed, "csv");
    Dataset d = RandomMixed(50, rng);
    // Values whose shortest form needs 17 significant digits or exponents.
    d = d.WithRow({1.0 / 3.0, CategoryIndex{0}, -1e-310, CategoryIndex{1}});
    d = d.WithRow({std::nextafter(100.0, 0.0), CategoryIndex{2}, -0.0,
                   CategoryIndex{0}});
    const auto path = dir / ("d" + std::to_string(seed) + ".csv");
    SaveCsv(d, path);
    const Dataset back = LoadCsv(path, d.schema());
    ASSERT_EQ(back.n(), d.n());
    for (std::size_t i = 0; i < d.n(); ++i) {
      for (std::size_t c = 0; c < d.schema().size(); ++c) {
        if (IsNumeric(d.row(i)[c])) {
          const double a = AsNumeric(d.row(i)[c]);
          const double b = AsNumeric(back.row(i)[c]);
          ASSERT_EQ(std::memcmp(&a, &b, sizeof a), 0) << a << " vs " << b;
        } else {
          ASSERT_EQ(AsCategory(d.row(i)[c]), AsCategory(back.row(i)[c]));
        }
      }
    }
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace synthaudit
