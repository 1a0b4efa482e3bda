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

#include "synthaudit/data/dataset.hpp"

#include <string>
#include <utility>

#include "synthaudit/common/error.hpp"

namespace synthaudit {

Dataset::Dataset() : schema_(std::make_shared<const TabularSchema>()) {}

Dataset::Dataset(TabularSchema schema)
    : schema_(std::make_shared<const TabularSchema>(std::move(schema))) {}

Dataset::Dataset(std::shared_ptr<const TabularSchema> schema)
    : schema_(std::move(schema)) {
  if (!schema_) Fail(ErrorCode::kInvalidArgument, "null schema");
}

Dataset::Dataset(TabularSchema schema, std::vector<Record> rows)
    : Dataset(std::make_shared<const TabularSchema>(std::move(schema)),
              std::move(rows)) {}

Dataset::Dataset(std::shared_ptr<const TabularSchema> schema,
                 std::vector<Record> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  if (!schema_) Fail(ErrorCode::kInvalidArgument, "null schema");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    try {
      schema_->ValidateRecord(rows_[i]);
    } catch (const Error& e) {
      Fail(ErrorCode::kInvalidRecord,
           "row " + std::to_string(i) + ": " + e.what());
    }
  }
}

Dataset Dataset::WithRow(const Record& record) const {
  std::vector<Record> rows = rows_;
  rows.push_back(record);
  return Dataset(schema_, std::move(rows));
}

Dataset Dataset::WithoutRow(std::size_t index) const {
  if (index >= rows_.size()) {
    Fail(ErrorCode::kInvalidArgument, "row index out of range");
  }
  std::vector<Record> rows;
  rows.reserve(rows_.size() - 1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i != index) rows.push_back(rows_[i]);
  }
  Dataset out(schema_);
  out.rows_ = std::move(rows);
  return out;
}

Dataset Dataset::Subset(std::span<const std::size_t> indices) const {
  Dataset out(schema_);
  out.rows_.reserve(indices.size());
  for (std::size_t i : indices) out.rows_.push_back(rows_.at(i));
  return out;
}

Dataset Dataset::Concat(const Dataset& other) const {
  RequireSameSchema(*this, other, "concat");
  Dataset out(schema_);
  out.rows_ = rows_;
  out.rows_.insert(out.rows_.end(), other.rows_.begin(), other.rows_.end());
  return out;
}

bool Dataset::Contains(const Record& record) const {
  for (const Record& r : rows_) {
    if (RecordsEqual(r, record)) return true;
  }
  return false;
}

void RequireSameSchema(const Dataset& a, const Dataset& b,
                       std::string_view context) {
  if (a.shared_schema() == b.shared_schema()) return;
  if (!(a.schema() == b.schema())) {
    Fail(ErrorCode::kSchemaMismatch,
         std::string(context) + ": datasets have different schemas");
  }
}

void RequireNonEmpty(const Dataset& d, std::string_view context) {
  if (d.empty()) {
    Fail(ErrorCode::kEmptyDataset, std::string(context) + ": dataset is empty");
  }
}

}  // namespace synthaudit
