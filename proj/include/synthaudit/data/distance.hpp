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

#ifndef SYNTHAUDIT_DATA_DISTANCE_HPP_
#define SYNTHAUDIT_DATA_DISTANCE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "json.hpp"
#include "synthaudit/data/dataset.hpp"

namespace synthaudit {

struct NumericRange {
  double lo = 0.0;
  double hi = 0.0;

  // lo >= hi marks a constant column, which contributes 0 to every distance.
  bool degenerate() const { return !(lo < hi); }

  friend bool operator==(const NumericRange&, const NumericRange&) = default;
};

// Gower-style mixed-type distance: the mean over active columns of
//   numeric:     min(1, |a - b| / (hi - lo))
//   categorical: 0 if equal, 1 otherwise
// so every distance lies in [0, 1]. Columns may be deactivated (attribute
// inference measures distance on the known columns only).
class DistanceConfig {
 public:
  DistanceConfig() = default;
  // `ranges` is aligned with schema columns; entries for categorical columns
  // must be nullopt and entries for numeric columns must be set.
  DistanceConfig(const TabularSchema& schema,
                 std::vector<std::optional<NumericRange>> ranges);

  // Normalizes by the declared schema [min, max].
  static DistanceConfig FromSchema(const TabularSchema& schema);
  // Normalizes by the observed min/max over the union of `datasets`, which
  // must share one schema. Audits fit this once on train and test.
  static DistanceConfig FitRanges(const std::vector<const Dataset*>& datasets);

  DistanceConfig WithoutColumn(std::size_t column) const;

  std::size_t column_count() const { return is_numeric_.size(); }
  std::size_t active_count() const { return active_count_; }
  bool active(std::size_t column) const { return active_.at(column); }
  bool is_numeric(std::size_t column) const { return is_numeric_.at(column); }
  const std::optional<NumericRange>& range(std::size_t column) const {
    return ranges_.at(column);
  }

  // Throws kSchemaMismatch if the schema's column kinds disagree.
  void CheckCompatible(const TabularSchema& schema) const;
  void CheckRecord(const Record& record) const;

  // Per-column contribution before averaging, in [0, 1].
  double ColumnDistance(std::size_t column, const Value& a,
                        const Value& b) const;

  // Checked distance; throws kSchemaMismatch.
  double Distance(const Record& a, const Record& b) const;
  // Assumes both records were already checked against this config.
  double DistanceUnchecked(const Record& a, const Record& b) const;

  nlohmann::json ToJson() const;

 private:
  std::vector<bool> is_numeric_;
  std::vector<std::optional<NumericRange>> ranges_;
  std::vector<bool> active_;
  std::size_t active_count_ = 0;
};

inline double Distance(const Record& a, const Record& b,
                       const DistanceConfig& cfg) {
  return cfg.Distance(a, b);
}

}  // namespace synthaudit

#endif  // SYNTHAUDIT_DATA_DISTANCE_HPP_
