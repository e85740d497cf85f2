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

#include "creadet/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>

#include "creadet/error.hpp"

namespace creadet::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  return in;
}

CsvReader::CsvReader(std::istream& in, std::vector<std::string> required_columns)
    : in_(in), required_(std::move(required_columns)) {
  std::string line;
  if (!next_line(line)) throw EmptyInputError("empty input: no header row");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);  // UTF-8 BOM
  for (auto f : split_fields(line)) header_.emplace_back(f);
  for (const auto& name : required_) {
    const auto it = std::find(header_.begin(), header_.end(), name);
    if (it == header_.end()) throw ParseError("missing column '" + name + "' in header", line_no_);
    required_pos_.push_back(static_cast<std::size_t>(it - header_.begin()));
  }
}

bool CsvReader::next_line(std::string& line) {
  while (std::getline(in_, line)) {
    ++line_no_;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    return true;
  }
  return false;
}

bool CsvReader::next(std::vector<std::string_view>& fields) {
  if (!next_line(line_)) return false;
  fields = split_fields(line_);
  if (fields.size() != header_.size()) {
    throw ParseError("expected " + std::to_string(header_.size()) + " fields, found " +
                         std::to_string(fields.size()),
                     line_no_);
  }
  return true;
}

std::size_t CsvReader::column(std::string_view name) const {
  for (std::size_t i = 0; i < required_.size(); ++i) {
    if (required_[i] == name) return required_pos_[i];
  }
  throw std::logic_error("CsvReader: column not declared as required");
}

double CsvReader::parse_double(std::string_view field, std::string_view column) const {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError("cannot parse " + std::string(column) + " value '" + std::string(field) + "'", line_no_);
  }
  return v;
}

long long CsvReader::parse_integer(std::string_view field, std::string_view column) const {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError("cannot parse " + std::string(column) + " value '" + std::string(field) + "'", line_no_);
  }
  return v;
}

}  // namespace creadet::io
