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

#ifndef SYNTHAUDIT_DATA_CSV_HPP_
#define SYNTHAUDIT_DATA_CSV_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "synthaudit/common/error.hpp"
#include "synthaudit/data/dataset.hpp"

namespace synthaudit {

class HeaderMismatchError : public Error {
 public:
  HeaderMismatchError(std::vector<std::string> expected,
                      std::vector<std::string> found);

  const std::vector<std::string>& expected() const { return expected_; }
  const std::vector<std::string>& found() const { return found_; }

 private:
  std::vector<std::string> expected_;
  std::vector<std::string> found_;
};

// `row` is the 1-based data row (the header is not counted).
class BadCellError : public Error {
 public:
  BadCellError(std::size_t row, std::string column, std::string reason);

  std::size_t row() const { return row_; }
  const std::string& column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t row_;
  std::string column_;
  std::string reason_;
};

// Shortest decimal string that parses back to exactly `value`.
std::string FormatNumber(double value);

// RFC 4180-style parsing: header row required, fields containing comma,
// double quote or newline are double-quoted with embedded quotes doubled.
// CRLF line endings are accepted. The first offending cell is reported.
Dataset ParseCsv(std::string_view text, const TabularSchema& schema);
Dataset LoadCsv(const std::filesystem::path& path, const TabularSchema& schema);

std::string FormatCsv(const Dataset& dataset);
void SaveCsv(const Dataset& dataset, const std::filesystem::path& path);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace synthaudit

#endif  // SYNTHAUDIT_DATA_CSV_HPP_
