/*
 * Copyright 2026 The pathent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef PATHENT_COMMON_CSV_H_
#define PATHENT_COMMON_CSV_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pathent {

// Six significant digits ("%.6g"); NaN becomes an empty field.
std::string FormatNumber(double value);
// Inverse of FormatNumber: empty field gives NaN. Throws std::invalid_argument
// on anything else that is not a number.
double ParseNumber(const std::string& field);

// RFC 4180: fields containing a comma, quote, CR or LF are quoted and inner
// quotes doubled; rows end with CRLF.
std::string QuoteField(const std::string& field);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void Row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

using CsvTable = std::vector<std::vector<std::string>>;

// Accepts CRLF or LF row endings. Throws std::invalid_argument on an
// unterminated quoted field.
CsvTable ParseCsv(std::istream& in);

}  // namespace pathent

#endif  // PATHENT_COMMON_CSV_H_
