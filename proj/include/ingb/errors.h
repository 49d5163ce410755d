// Copyright 2026 The INGB Authors.
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

#ifndef INGB_ERRORS_H_
#define INGB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ingb {

// Base class for every error raised by the library. The CLI maps the two
// subclasses below onto its exit-code taxonomy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Environment failures: unreadable files, malformed input bytes.
class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public IoError {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : IoError(what + " (row " + std::to_string(row) + ", column " +
                std::to_string(column) + ")"),
        row_(row),
        column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

// Precondition or domain violations by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace ingb

#endif  // INGB_ERRORS_H_
