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

#include "synthaudit/data/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "synthaudit/common/error.hpp"

namespace synthaudit {

DistanceConfig::DistanceConfig(const TabularSchema& schema,
                               std::vector<std::optional<NumericRange>> ranges)
    : ranges_(std::move(ranges)) {
  if (ranges_.size() != schema.size()) {
    Fail(ErrorCode::kSchemaMismatch,
         "distance config has " + std::to_string(ranges_.size()) +
             " ranges for " + std::to_string(schema.size()) + " columns");
  }
  is_numeric_.resize(schema.size());
  for (std::size_t i = 0; i < schema.size(); ++i) {
    is_numeric_[i] = schema.column(i).is_numeric();
    if (is_numeric_[i] != ranges_[i].has_value()) {
      Fail(ErrorCode::kSchemaMismatch,
           "range presence does not match kind of column '" +
               schema.column(i).name + "'");
    }
  }
  active_.assign(schema.size(), true);
  active_count_ = schema.size();
}

DistanceConfig DistanceConfig::FromSchema(const TabularSchema& schema) {
  std::vector<std::optional<NumericRange>> ranges(schema.size());
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (schema.column(i).is_numeric()) {
      ranges[i] = NumericRange{schema.column(i).numeric().min,
                               schema.column(i).numeric().max};
    }
  }
  return DistanceConfig(schema, std::move(ranges));
}

DistanceConfig DistanceConfig::FitRanges(
    const std::vector<const Dataset*>& datasets) {
  if (datasets.empty()) {
    Fail(ErrorCode::kInvalidArgument, "FitRanges needs at least one dataset");
  }
  const TabularSchema& schema = datasets.front()->schema();
  for (const Dataset* d : datasets) {
    RequireSameSchema(*datasets.front(), *d, "FitRanges");
  }
  std::vector<std::optional<NumericRange>> ranges(schema.size());
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (!schema.column(c).is_numeric()) continue;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Dataset* d : datasets) {
      for (const Record& r : d->rows()) {
        lo = std::min(lo, AsNumeric(r[c]));
        hi = std::max(hi, AsNumeric(r[c]));
      }
    }
    // No observations: fall back to a constant column.
    if (lo > hi) lo = hi = 0.0;
    ranges[c] = NumericRange{lo, hi};
  }
  return DistanceConfig(schema, std::move(ranges));
}

DistanceConfig DistanceConfig::WithoutColumn(std::size_t column) const {
  if (column >= column_count()) {
    Fail(ErrorCode::kUnknownColumn, "column index out of range");
  }
  DistanceConfig out = *this;
  if (out.active_[column]) {
    out.active_[column] = false;
    --out.active_count_;
  }
  return out;
}

void DistanceConfig::CheckCompatible(const TabularSchema& schema) const {
  if (schema.size() != column_count()) {
    Fail(ErrorCode::kSchemaMismatch,
         "schema has " + std::to_string(schema.size()) +
             " columns, distance config has " +
             std::to_string(column_count()));
  }
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (schema.column(i).is_numeric() != is_numeric_[i]) {
      Fail(ErrorCode::kSchemaMismatch,
           "column '" + schema.column(i).name + "' kind differs");
    }
  }
}

void DistanceConfig::CheckRecord(const Record& record) const {
  if (record.size() != column_count()) {
    Fail(ErrorCode::kSchemaMismatch, "record length differs from config");
  }
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (IsNumeric(record[i]) != is_numeric_[i]) {
      Fail(ErrorCode::kSchemaMismatch,
           "value kind differs at column " + std::to_string(i));
    }
  }
}

double DistanceConfig::ColumnDistance(std::size_t column, const Value& a,
                                      const Value& b) const {
  if (is_numeric_[column]) {
    const NumericRange& r = *ranges_[column];
    if (r.degenerate()) return 0.0;
    const double d = std::abs(AsNumeric(a) - AsNumeric(b)) / (r.hi - r.lo);
    return std::min(1.0, d);
  }
  return AsCategory(a) == AsCategory(b) ? 0.0 : 1.0;
}

double DistanceConfig::Distance(const Record& a, const Record& b) const {
  CheckRecord(a);
  CheckRecord(b);
  return DistanceUnchecked(a, b);
}

double DistanceConfig::DistanceUnchecked(const Record& a,
                                         const Record& b) const {
  if (active_count_ == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < is_numeric_.size(); ++i) {
    if (active_[i]) sum += ColumnDistance(i, a[i], b[i]);
  }
  return sum / static_cast<double>(active_count_);
}

nlohmann::json DistanceConfig::ToJson() const {
  nlohmann::json cols = nlohmann::json::array();
  for (std::size_t i = 0; i < is_numeric_.size(); ++i) {
    nlohmann::json c = {{"active", static_cast<bool>(active_[i])}};
    if (ranges_[i]) {
      c["lo"] = ranges_[i]->lo;
      c["hi"] = ranges_[i]->hi;
    }
    cols.push_back(std::move(c));
  }
  return {{"aggregation", "column-mean"}, {"columns", cols}};
}

}  // namespace synthaudit
