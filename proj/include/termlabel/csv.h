// Copyright 2026 The termlabel Authors.
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

#ifndef TERMLABEL_CSV_H_
#define TERMLABEL_CSV_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace termlabel {

// Minimal RFC 4180 reader: comma separated, '"' quoting with "" escapes,
// quoted fields may span lines. Handles \n and \r\n endings.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads the next record into `fields`. Returns false at end of input.
  // Throws Error on an unterminated quote.
  bool Next(std::vector<std::string>& fields);

  // 1-based line number where the last returned record started.
  size_t line() const { return record_line_; }

 private:
  std::istream& in_;
  size_t line_ = 1;
  size_t record_line_ = 0;
};

// Quotes `field` if it contains a comma, quote or line break.
std::string CsvEscape(std::string_view field);

}  // namespace termlabel

#endif  // TERMLABEL_CSV_H_
