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

#include "synthaudit/data/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace synthaudit {
namespace {

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

// Splits CSV text into records of raw fields. Quoted fields may span lines.
std::vector<std::vector<std::string>> Tokenize(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // A blank line produces a single empty field; skip it.
    if (!(fields.size() == 1 && fields[0].empty())) {
      records.push_back(std::move(fields));
    }
    fields.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.empty()) {
          in_quotes = true;
          field_started = true;
        } else {
          field += c;
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) {
    Fail(ErrorCode::kBadCell, "unterminated quoted field at end of input");
  }
  if (!field.empty() || field_started || !fields.empty()) end_record();
  return records;
}

bool NeedsQuoting(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos;
}

std::string Quote(std::string_view s) {
  if (!NeedsQuoting(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

HeaderMismatchError::HeaderMismatchError(std::vector<std::string> expected,
                                         std::vector<std::string> found)
    : Error(ErrorCode::kHeaderMismatch,
            "expected header '" + JoinNames(expected) + "', found '" +
                JoinNames(found) + "'"),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

BadCellError::BadCellError(std::size_t row, std::string column,
                           std::string reason)
    : Error(ErrorCode::kBadCell, "row " + std::to_string(row) + ", column '" +
                                     column + "': " + reason),
      row_(row),
      column_(std::move(column)),
      reason_(std::move(reason)) {}

std::string FormatNumber(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

Dataset ParseCsv(std::string_view text, const TabularSchema& schema) {
  auto records = Tokenize(text);
  if (records.empty()) {
    throw HeaderMismatchError(schema.ColumnNames(), {});
  }
  if (records.front() != schema.ColumnNames()) {
    throw HeaderMismatchError(schema.ColumnNames(), records.front());
  }
  std::vector<Record> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& fields = records[r];
    if (fields.size() != schema.size()) {
      const std::size_t col = std::min(fields.size(), schema.size() - 1);
      throw BadCellError(r, schema.column(col).name,
                         "expected " + std::to_string(schema.size()) +
                             " fields, found " + std::to_string(fields.size()));
    }
    Record rec(schema.size());
    for (std::size_t c = 0; c < schema.size(); ++c) {
      const Column& column = schema.column(c);
      const std::string& cell = fields[c];
      if (column.is_numeric()) {
        double v = 0.0;
        const char* first = cell.data();
        const char* last = cell.data() + cell.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (cell.empty() || ec != std::errc() || ptr != last) {
          throw BadCellError(r, column.name, "not a decimal number");
        }
        if (!std::isfinite(v)) {
          throw BadCellError(r, column.name, "non-finite value");
        }
        rec[c] = v;
      } else {
        auto level = schema.FindLevel(c, cell);
        if (!level) throw BadCellError(r, column.name, "unknown level");
        rec[c] = CategoryIndex{*level};
      }
    }
    rows.push_back(std::move(rec));
  }
  return Dataset(schema, std::move(rows));
}

Dataset LoadCsv(const std::filesystem::path& path,
                const TabularSchema& schema) {
  return ParseCsv(ReadFile(path), schema);
}

std::string FormatCsv(const Dataset& dataset) {
  const TabularSchema& schema = dataset.schema();
  std::string out;
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (c) out += ',';
    out += Quote(schema.column(c).name);
  }
  out += '\n';
  for (const Record& r : dataset.rows()) {
    for (std::size_t c = 0; c < schema.size(); ++c) {
      if (c) out += ',';
      if (IsNumeric(r[c])) {
        out += FormatNumber(AsNumeric(r[c]));
      } else {
        out += Quote(schema.column(c).categorical().levels[AsCategory(r[c])]);
      }
    }
    out += '\n';
  }
  return out;
}

void SaveCsv(const Dataset& dataset, const std::filesystem::path& path) {
  WriteFile(path, FormatCsv(dataset));
}

std::string ReadFile(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    Fail(ErrorCode::kMissingFile, path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kMissingFile, path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIoError, "cannot open " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) Fail(ErrorCode::kIoError, "write failed for " + path.string());
}

}  // namespace synthaudit
