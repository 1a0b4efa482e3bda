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

#ifndef SYNTHAUDIT_TESTS_TEST_UTIL_HPP_
#define SYNTHAUDIT_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include <gtest/gtest.h>

#include "synthaudit/common/error.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/rng.hpp"

namespace synthaudit::testing {

// Runs fn and checks that it throws synthaudit::Error with `code`.
inline ::testing::AssertionResult ThrowsCode(const std::function<void()>& fn,
                                             ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == code) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure()
           << "threw " << ErrorCodeName(e.code()) << " (" << e.what()
           << "), expected " << ErrorCodeName(code);
  } catch (const std::exception& e) {
    return ::testing::AssertionFailure() << "threw non-library error "
                                         << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw "
                                       << ErrorCodeName(code);
}

#define EXPECT_ERROR_CODE(stmt, code) \
  EXPECT_TRUE(::synthaudit::testing::ThrowsCode([&] { stmt; }, code))

inline std::shared_ptr<const TabularSchema> NumericSchema(
    std::size_t columns, double lo = 0.0, double hi = 1.0) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < columns; ++i) {
    cols.push_back({"n" + std::to_string(i), NumericKind{lo, hi}});
  }
  return std::make_shared<const TabularSchema>(std::move(cols));
}

// Two numeric and two categorical columns.
inline std::shared_ptr<const TabularSchema> MixedSchema() {
  return std::make_shared<const TabularSchema>(std::vector<Column>{
      {"age", NumericKind{0.0, 100.0}},
      {"color", CategoricalKind{{"red", "green", "blue"}}},
      {"income", NumericKind{-50.0, 50.0}},
      {"flag", CategoricalKind{{"no", "yes"}}},
  });
}

// Random rows for MixedSchema. Numeric values are drawn from a small grid
// when `coarse` is set so that exact ties and duplicate rows occur.
inline Dataset RandomMixed(std::size_t n, SeededRng& rng, bool coarse = false) {
  auto schema = MixedSchema();
  std::vector<Record> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = coarse ? 10.0 * static_cast<double>(rng.UniformInt(11))
                            : 100.0 * rng.Uniform01();
    const double b = coarse ? 25.0 * static_cast<double>(rng.UniformInt(5)) - 50.0
                            : 100.0 * rng.Uniform01() - 50.0;
    rows.push_back(
        {a, CategoryIndex{static_cast<std::uint32_t>(rng.UniformInt(3))}, b,
         CategoryIndex{static_cast<std::uint32_t>(rng.UniformInt(2))}});
  }
  return Dataset(schema, std::move(rows));
}

inline Dataset Numeric(std::shared_ptr<const TabularSchema> schema,
                       const std::vector<std::vector<double>>& values) {
  std::vector<Record> rows;
  for (const auto& v : values) rows.emplace_back(v.begin(), v.end());
  return Dataset(std::move(schema), std::move(rows));
}

}  // namespace synthaudit::testing

#endif  // SYNTHAUDIT_TESTS_TEST_UTIL_HPP_
