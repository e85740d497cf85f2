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
#include <stdexcept>
#include <string>

namespace creadet {

/// Input outside the domain of an operation (negative counts, length
/// mismatch, non-normalized distribution, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A likelihood ratio is undefined because one hypothesis assigns zero
/// probability to observed data. Callers treat this as infinite evidence
/// rather than as a numeric infinity.
class InfiniteEvidenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `row()` is the 1-based line number, or 0 when the
/// problem is not tied to a line (e.g. empty input).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t row)
      : std::runtime_error(row == 0 ? what : "row " + std::to_string(row) + ": " + what),
        row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class EmptyInputError : public ParseError {
 public:
  explicit EmptyInputError(const std::string& what) : ParseError(what, 0) {}
};

}  // namespace creadet
