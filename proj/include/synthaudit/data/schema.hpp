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

#ifndef SYNTHAUDIT_DATA_SCHEMA_HPP_
#define SYNTHAUDIT_DATA_SCHEMA_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace synthaudit {

struct CategoricalKind {
  std::vector<std::string> levels;

  friend bool operator==(const CategoricalKind&,
                         const CategoricalKind&) = default;
};

// min == max is allowed and denotes a constant column.
struct NumericKind {
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const NumericKind&, const NumericKind&) = default;
};

using ColumnKind = std::variant<CategoricalKind, NumericKind>;

struct Column {
  std::string name;
  ColumnKind kind;

  bool is_numeric() const { return std::holds_alternative<NumericKind>(kind); }
  bool is_categorical() const { return !is_numeric(); }
  const NumericKind& numeric() const { return std::get<NumericKind>(kind); }
  const CategoricalKind& categorical() const {
    return std::get<CategoricalKind>(kind);
  }

  friend bool operator==(const Column&, const Column&) = default;
};

// Index into a categorical column's level list.
struct CategoryIndex {
  std::uint32_t index = 0;

  friend auto operator<=>(const CategoryIndex&,
                          const CategoryIndex&) = default;
};

// A cell is either a category index or a finite real.
using Value = std::variant<CategoryIndex, double>;

// One individual's row; positionally aligned with the schema columns.
using Record = std::vector<Value>;

inline bool IsNumeric(const Value& v) {
  return std::holds_alternative<double>(v);
}
inline double AsNumeric(const Value& v) { return std::get<double>(v); }
inline std::uint32_t AsCategory(const Value& v) {
  return std::get<CategoryIndex>(v).index;
}

// Exact-copy equality used by identical-match counting. Numeric cells compare
// with ==, so -0.0 and 0.0 are the same value.
bool RecordsEqual(const Record& a, const Record& b);

struct RecordHash {
  std::size_t operator()(const Record& r) const;
};

struct RecordEq {
  bool operator()(const Record& a, const Record& b) const {
    return RecordsEqual(a, b);
  }
};

// Ordered, validated list of named columns. Immutable once constructed.
class TabularSchema {
 public:
  TabularSchema() = default;
  explicit TabularSchema(std::vector<Column> columns);

  static TabularSchema FromJson(const nlohmann::json& j);
  static TabularSchema Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;
  void Save(const std::filesystem::path& path) const;

  std::size_t size() const { return columns_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  const Column& column(std::size_t i) const { return columns_.at(i); }

  std::optional<std::size_t> FindColumn(std::string_view name) const;
  // Throws kUnknownColumn.
  std::size_t ColumnIndex(std::string_view name) const;
  std::optional<std::uint32_t> FindLevel(std::size_t column,
                                         std::string_view level) const;

  std::vector<std::string> ColumnNames() const;

  // Throws kInvalidRecord on length, kind, range or finiteness violations.
  void ValidateRecord(const Record& record) const;
  std::string DescribeRecord(const Record& record) const;

  friend bool operator==(const TabularSchema&, const TabularSchema&) = default;

 private:
  std::vector<Column> columns_;
};

}  // namespace synthaudit

#endif  // SYNTHAUDIT_DATA_SCHEMA_HPP_
