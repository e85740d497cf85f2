// Copyright 2026 The creadet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace creadet::io {

/// 17 significant digits; reads back to the identical double.
std::string format_double(double v);

/// Line-oriented reader for the project's CSV formats: comma separated, a
/// required header row, '#' comment lines and blank lines skipped.
class CsvReader {
 public:
  /// Reads and checks the header. Throws EmptyInputError if the input holds
  /// no header, ParseError if the header lacks a required column.
  CsvReader(std::istream& in, std::vector<std::string> required_columns);

  /// Next data row split into fields, or false at end of input.
  bool next(std::vector<std::string_view>& fields);

  /// 1-based line number of the row last returned.
  std::size_t row() const { return line_no_; }

  /// Position of a required column in each row.
  std::size_t column(std::string_view name) const;

  double parse_double(std::string_view field, std::string_view column) const;
  long long parse_integer(std::string_view field, std::string_view column) const;

 private:
  bool next_line(std::string& line);

  std::istream& in_;
  std::vector<std::string> header_;
  std::vector<std::string> required_;
  std::vector<std::size_t> required_pos_;
  std::string line_;
  std::size_t line_no_ = 0;
};

std::vector<std::string_view> split_fields(std::string_view line);

std::ifstream open_input(const std::filesystem::path& path);

}  // namespace creadet::io
