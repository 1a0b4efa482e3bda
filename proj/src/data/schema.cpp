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

#include "synthaudit/data/schema.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "synthaudit/common/error.hpp"
#include "synthaudit/data/csv.hpp"

namespace synthaudit {

bool RecordsEqual(const Record& a, const Record& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index() != b[i].index()) return false;
    if (IsNumeric(a[i])) {
      if (AsNumeric(a[i]) != AsNumeric(b[i])) return false;
    } else if (AsCategory(a[i]) != AsCategory(b[i])) {
      return false;
    }
  }
  return true;
}

std::size_t RecordHash::operator()(const Record& r) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const Value& v : r) {
    std::uint64_t bits = 0;
    if (IsNumeric(v)) {
      double d = AsNumeric(v);
      if (d == 0.0) d = 0.0;  // fold -0.0 onto +0.0
      std::memcpy(&bits, &d, sizeof(bits));
    } else {
      bits = 0xc2b2ae3d27d4eb4fULL ^ AsCategory(v);
    }
    h ^= std::hash<std::uint64_t>{}(bits) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

TabularSchema::TabularSchema(std::vector<Column> columns)
    : columns_(std::move(columns)) {
  std::set<std::string> names;
  for (const Column& c : columns_) {
    if (c.name.empty()) Fail(ErrorCode::kInvalidSchema, "empty column name");
    if (!names.insert(c.name).second) {
      Fail(ErrorCode::kInvalidSchema, "duplicate column name '" + c.name + "'");
    }
    if (c.is_numeric()) {
      const NumericKind& k = c.numeric();
      if (!std::isfinite(k.min) || !std::isfinite(k.max)) {
        Fail(ErrorCode::kInvalidSchema,
             "column '" + c.name + "' has a non-finite bound");
      }
      if (k.min > k.max) {
        Fail(ErrorCode::kInvalidSchema,
             "column '" + c.name + "' has min > max");
      }
    } else {
      const auto& levels = c.categorical().levels;
      if (levels.empty()) {
        Fail(ErrorCode::kInvalidSchema,
             "column '" + c.name + "' has no levels");
      }
      std::set<std::string> seen;
      for (const auto& level : levels) {
        if (!seen.insert(level).second) {
          Fail(ErrorCode::kInvalidSchema, "column '" + c.name +
                                              "' repeats level '" + level +
                                              "'");
        }
      }
    }
  }
}

TabularSchema TabularSchema::FromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("columns") || !j["columns"].is_array()) {
    Fail(ErrorCode::kInvalidSchema, "expected an object with a 'columns' array");
  }
  std::vector<Column> columns;
  for (const auto& c : j["columns"]) {
    try {
      Column col;
      col.name = c.at("name").get<std::string>();
      const std::string kind = c.at("kind").get<std::string>();
      if (kind == "numeric") {
        col.kind = NumericKind{c.at("min").get<double>(),
                               c.at("max").get<double>()};
      } else if (kind == "categorical") {
        col.kind = CategoricalKind{
            c.at("levels").get<std::vector<std::string>>()};
      } else {
        Fail(ErrorCode::kInvalidSchema, "unknown column kind '" + kind + "'");
      }
      columns.push_back(std::move(col));
    } catch (const nlohmann::json::exception& e) {
      Fail(ErrorCode::kInvalidSchema, e.what());
    }
  }
  return TabularSchema(std::move(columns));
}

TabularSchema TabularSchema::Load(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(ErrorCode::kInvalidSchema, path.string() + ": " + e.what());
  }
  return FromJson(j);
}

nlohmann::json TabularSchema::ToJson() const {
  nlohmann::json cols = nlohmann::json::array();
  for (const Column& c : columns_) {
    if (c.is_numeric()) {
      cols.push_back({{"name", c.name},
                      {"kind", "numeric"},
                      {"min", c.numeric().min},
                      {"max", c.numeric().max}});
    } else {
      cols.push_back({{"name", c.name},
                      {"kind", "categorical"},
                      {"levels", c.categorical().levels}});
    }
  }
  return {{"columns", cols}};
}

void TabularSchema::Save(const std::filesystem::path& path) const {
  WriteFile(path, ToJson().dump(2) + "\n");
}

std::optional<std::size_t> TabularSchema::FindColumn(
    std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t TabularSchema::ColumnIndex(std::string_view name) const {
  auto idx = FindColumn(name);
  if (!idx) Fail(ErrorCode::kUnknownColumn, "no column '" + std::string(name) + "'");
  return *idx;
}

std::optional<std::uint32_t> TabularSchema::FindLevel(
    std::size_t column, std::string_view level) const {
  const auto& levels = columns_.at(column).categorical().levels;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] == level) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::vector<std::string> TabularSchema::ColumnNames() const {
  std::vector<std::string> names;
  names.reserve(columns_.size());
  for (const Column& c : columns_) names.push_back(c.name);
  return names;
}

void TabularSchema::ValidateRecord(const Record& record) const {
  if (record.size() != columns_.size()) {
    Fail(ErrorCode::kInvalidRecord,
         "record has " + std::to_string(record.size()) + " values, schema has " +
             std::to_string(columns_.size()) + " columns");
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const Column& c = columns_[i];
    if (c.is_numeric()) {
      if (!IsNumeric(record[i])) {
        Fail(ErrorCode::kInvalidRecord,
             "column '" + c.name + "' expects a numeric value");
      }
      if (!std::isfinite(AsNumeric(record[i]))) {
        Fail(ErrorCode::kInvalidRecord,
             "column '" + c.name + "' holds a non-finite value");
      }
    } else {
      if (IsNumeric(record[i])) {
        Fail(ErrorCode::kInvalidRecord,
             "column '" + c.name + "' expects a category");
      }
      if (AsCategory(record[i]) >= c.categorical().levels.size()) {
        Fail(ErrorCode::kInvalidRecord,
             "column '" + c.name + "' category index out of range");
      }
    }
  }
}

std::string TabularSchema::DescribeRecord(const Record& record) const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (i) out << ", ";
    if (IsNumeric(record[i])) {
      out << FormatNumber(AsNumeric(record[i]));
    } else if (i < columns_.size() && columns_[i].is_categorical() &&
               AsCategory(record[i]) < columns_[i].categorical().levels.size()) {
      out << columns_[i].categorical().levels[AsCategory(record[i])];
    } else {
      out << "#" << AsCategory(record[i]);
    }
  }
  out << ")";
  return out.str();
}

}  // namespace synthaudit
