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

#ifndef SYNTHAUDIT_DATA_DATASET_HPP_
#define SYNTHAUDIT_DATA_DATASET_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "synthaudit/data/schema.hpp"

namespace synthaudit {

// A schema plus validated rows. Values are immutable after construction; the
// schema is shared between copies, so datasets are cheap to pass around and
// safe to read concurrently.
class Dataset {
 public:
  Dataset();
  explicit Dataset(TabularSchema schema);
  explicit Dataset(std::shared_ptr<const TabularSchema> schema);
  Dataset(TabularSchema schema, std::vector<Record> rows);
  Dataset(std::shared_ptr<const TabularSchema> schema,
          std::vector<Record> rows);

  const TabularSchema& schema() const { return *schema_; }
  const std::shared_ptr<const TabularSchema>& shared_schema() const {
    return schema_;
  }
  const std::vector<Record>& rows() const { return rows_; }
  const Record& row(std::size_t i) const { return rows_.at(i); }
  std::size_t n() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  Dataset WithRow(const Record& record) const;
  Dataset WithoutRow(std::size_t index) const;
  Dataset Subset(std::span<const std::size_t> indices) const;
  // Rows of this dataset followed by rows of other; schemas must match.
  Dataset Concat(const Dataset& other) const;
  bool Contains(const Record& record) const;

 private:
  std::shared_ptr<const TabularSchema> schema_;
  std::vector<Record> rows_;
};

// Throws kSchemaMismatch naming `context` when the schemas differ.
void RequireSameSchema(const Dataset& a, const Dataset& b,
                       std::string_view context);
void RequireNonEmpty(const Dataset& d, std::string_view context);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_DATA_DATASET_HPP_
